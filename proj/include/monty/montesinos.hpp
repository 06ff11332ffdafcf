#pragma once

#include "monty/arith.hpp"
#include "monty/cf.hpp"
#include "monty/notation.hpp"

#include <string>
#include <variant>
#include <vector>

namespace monty {

// Pretzel and two-bridge expressions rewritten as Montesinos links of the
// same link. P(q_1..q_k) keeps 1/q_i for |q_i| > 1 and folds q_i = +-1
// into e.
MontesinosLink to_montesinos(const LinkExpr& expr);

// Negates every slope and e.
MontesinosLink mirror(const MontesinosLink& k);

// Cyclic rotation putting the even-denominator slope first. Throws
// DomainError if two or more denominators are even (never a knot).
MontesinosLink canonicalize(const MontesinosLink& k);

enum class MontesinosType { odd, even };
MontesinosType montesinos_type(const MontesinosLink& canonical);
std::string to_string(MontesinosType t);

// prod(alpha_i) * (e + sum beta_i/alpha_i), checked to be an integer.
Integer signed_determinant(const MontesinosLink& k);
Integer determinant_formula(const MontesinosLink& k);

// M(-d_1/(2d_1+1), ..., -d_r/(2d_r+1) | 1)
MontesinosLink odd_family_member(const std::vector<long>& d);
// M(-m_1/(m_1+1), ..., -m_r/(m_r+1) | 2)
MontesinosLink even_family_member(const std::vector<long>& m);

struct OddTight {
    std::vector<long> d;  // sorted ascending
};
struct EvenTight {
    std::vector<long> m;  // m_1 (odd) first, rest ascending
};
// T(2, 2n+1); n = 0 is the unknot.
struct TwoBridgeTorus {
    long n;
};
struct NotInFamily {
    std::string reason;
};

struct FamilyMembership {
    std::variant<OddTight, EvenTight, TwoBridgeTorus, NotInFamily> kind;
    bool mirrored = false;

    bool in_family() const { return !std::holds_alternative<NotInFamily>(kind); }
};

std::string to_string(const FamilyMembership& f);

// Tests K and its mirror against both tight fibered families. Links of
// length <= 2 are reduced to two-bridge form and matched against T(2,N),
// with b(N, N-1) (the family chirality) unmirrored.
FamilyMembership recognize_family(const MontesinosLink& canonical);

// 2g = sum d_i; Throws DomainError on odd sum or nonpositive entries.
long genus_odd_family(const std::vector<long>& d);
// 2g = 1 + sum m_i; requires m_1 odd and the rest even.
long genus_even_family(const std::vector<long>& m);

// g = (sum over i of the even-position coefficients b_j of S_i, plus |e|,
// minus 1) / 2 for strict expansions S_i of even length presenting K as
// M(eval(S_1), ..., eval(S_r) | e). Only valid for fibered odd-type knots,
// which the caller must assert.
long genus_odd_hm(const MontesinosLink& k, const std::vector<ContinuedFraction>& strict_cfs, const Integer& e,
                  bool fibered_asserted);

// P(m_1+1, ..., m_r+1, -1, ..., -1) with r-2 trailing -1 entries.
Pretzel montesinos_to_pretzel(const std::vector<long>& m);

// Two-bridge form b(p, q) of a length <= 2 link: p = det >= 0 and q
// canonical, i.e. the smaller of q mod p and q^-1 mod p. The unknot is
// b(1, 0) and the two-component unlink b(0, 1).
TwoBridge two_bridge_reduce(const MontesinosLink& k);

// For a canonical b(p, q): N when it is T(2, N), otherwise 0.
long torus_index(const TwoBridge& b);

}  // namespace monty

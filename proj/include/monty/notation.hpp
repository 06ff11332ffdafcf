#pragma once

#include "monty/arith.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace monty {

// Slope beta/alpha of one rational tangle. In normal form alpha > 1,
// |beta| < alpha and gcd(alpha, beta) = 1.
struct Slope {
    Integer beta;
    Integer alpha;

    Rational value() const { return Rational(beta, alpha); }
    bool is_normal() const;

    friend bool operator==(const Slope&, const Slope&) = default;
};

// M(beta_1/alpha_1, ..., beta_r/alpha_r | e). The link is the numerator
// closure of the tangle sum beta_1/alpha_1 + ... + beta_r/alpha_r + e.
struct MontesinosLink {
    std::vector<Slope> slopes;
    Integer e;

    std::size_t length() const { return slopes.size(); }

    friend bool operator==(const MontesinosLink&, const MontesinosLink&) = default;
};

// P(q_1, ..., q_k): vertical twist columns of q_i half-twists side by side.
struct Pretzel {
    std::vector<Integer> twists;

    friend bool operator==(const Pretzel&, const Pretzel&) = default;
};

// b(alpha, beta): numerator closure of the rational tangle alpha/beta.
struct TwoBridge {
    Integer alpha;
    Integer beta;

    friend bool operator==(const TwoBridge&, const TwoBridge&) = default;
};

using LinkExpr = std::variant<MontesinosLink, Pretzel, TwoBridge>;

// Accepts `M(f1,...,fr|e)`, `P(q1,...,qk)` and `B(a/b)`; whitespace is
// ignored. Slope numerators with |beta| >= alpha have their integer part
// moved into e, and integer slopes are absorbed into e entirely.
LinkExpr parse(std::string_view text);

std::string print(const LinkExpr& expr);
std::string print(const MontesinosLink& link);

// Reads a corpus: one expression per line, `#` starts a comment, blank
// lines are skipped. Returns the non-empty lines (trimmed, comment-free).
std::vector<std::string> corpus_lines(std::string_view contents);

}  // namespace monty

#pragma once

#include "monty/arith.hpp"

#include <map>
#include <string>
#include <vector>

namespace monty {

// Integer Laurent polynomial in t, stored sparsely by exponent. Zero
// coefficients are never stored; the zero polynomial is the empty map.
class LaurentPoly {
public:
    using Terms = std::map<long, Integer>;

    LaurentPoly() = default;
    LaurentPoly(const Integer& c);  // constant; implicit on purpose
    LaurentPoly(long c) : LaurentPoly(Integer(c)) {}
    static LaurentPoly monomial(const Integer& c, long exponent);
    static LaurentPoly t() { return monomial(1, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coeff(long exponent) const;

    // Undefined (throws DomainError) on the zero polynomial.
    long min_exponent() const;
    long max_exponent() const;
    long span() const { return max_exponent() - min_exponent(); }
    Integer leading() const;
    Integer trailing() const;

    // gcd of the coefficients, nonnegative; 0 for the zero polynomial.
    Integer content() const;
    LaurentPoly shifted(long k) const;  // multiply by t^k
    LaurentPoly divide_exact(const Integer& d) const;

    LaurentPoly& operator+=(const LaurentPoly& q);
    LaurentPoly& operator-=(const LaurentPoly& q);
    LaurentPoly& operator*=(const LaurentPoly& q);
    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
    friend LaurentPoly operator*(LaurentPoly p, const LaurentPoly& q) { return p *= q; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void add_term(long exponent, const Integer& c);
    Terms terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly neg(const LaurentPoly& p);

// x must be nonzero.
Rational eval_int(const LaurentPoly& p, const Integer& x);

// Representative of p up to +-t^k with exponents symmetric about 0 and a
// positive leading coefficient. Throws DomainError if p is zero or not
// palindromic (or anti-palindromic) up to a unit.
LaurentPoly normalize_symmetric(const LaurentPoly& p);

// True iff every nonzero coefficient is +-1 and, in increasing exponent
// order, signs alternate and both endpoints are +1. Clearing
// `endpoint_rule` drops the endpoint requirement.
bool lspace_coefficient_form(const LaurentPoly& p, bool endpoint_rule = true);

// Descending exponents: "t^2 + t - 3 + t^-1 + t^-2", "0" for zero.
std::string to_string(const LaurentPoly& p);

// Parses the to_string format (also accepts "3t^2", "-t", "2*t^-1").
LaurentPoly parse_laurent(const std::string& text);

class PolyMatrix {
public:
    explicit PolyMatrix(std::size_t n);

    std::size_t size() const { return n_; }
    LaurentPoly& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<LaurentPoly> entries_;
};

// Exact determinant. Evaluates at enough points modulo enough word-size
// primes, interpolates per prime and lifts with the Chinese remainder
// theorem against an a-priori coefficient bound.
LaurentPoly det(const PolyMatrix& m);

}  // namespace monty

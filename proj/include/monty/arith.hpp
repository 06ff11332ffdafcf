#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace monty {

using Integer = mpz_class;
using Rational = mpq_class;

// A computation that is well-posed but has no answer for this input
// (non-knot where a knot is required, no expansion exists, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input. `position` is the 0-based byte offset.
class ParseError : public DomainError {
public:
    ParseError(const std::string& message, std::size_t position)
        : DomainError(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

inline int sign(const Integer& x) { return sgn(x); }

Integer gcd(const Integer& a, const Integer& b);

// Floor division and matching remainder (remainder has the sign of b).
Integer floor_div(const Integer& a, const Integer& b);
// Division rounding toward zero.
Integer trunc_div(const Integer& a, const Integer& b);

// Solves a*x + b*y = gcd(a, b); returns the gcd.
Integer extended_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y);

// Inverse of a modulo m (m > 1, gcd(a, m) = 1), in [0, m).
Integer mod_inverse(const Integer& a, const Integer& m);

// Reduces a into [0, m).
Integer mod_floor(const Integer& a, const Integer& m);

// Converts to long, throwing DomainError if out of range.
long to_long(const Integer& x, const char* what);

// Fraction-free (Bareiss) determinant of a square matrix; 1 for 0x0.
Integer bareiss_det(std::vector<std::vector<Integer>> m);

std::string to_string(const Integer& x);
std::string to_string(const Rational& q);

}  // namespace monty

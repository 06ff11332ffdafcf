#pragma once

#include "monty/arith.hpp"
#include "monty/notation.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace monty {

enum class CfFlavor { plain, even, strict };

// Descending continued fraction [x_1, ..., x_m] with value
//
//     1 / (x_1 - 1 / (x_2 - ... - 1 / x_m))
//
// Every coefficient is nonzero. An even fraction has only even
// coefficients. A strict fraction has x_j even at every odd (1-based)
// position j, and when x_j = +-2 the next coefficient exists and has the
// opposite sign.
class ContinuedFraction {
public:
    // Validates against the flavor; throws DomainError on violation.
    ContinuedFraction(std::vector<Integer> coeffs, CfFlavor flavor = CfFlavor::plain);

    const std::vector<Integer>& coeffs() const { return coeffs_; }
    CfFlavor flavor() const { return flavor_; }
    std::size_t size() const { return coeffs_.size(); }

    friend bool operator==(const ContinuedFraction& a, const ContinuedFraction& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Integer> coeffs_;
    CfFlavor flavor_;
};

bool is_even_sequence(const std::vector<Integer>& coeffs);
bool is_strict_sequence(const std::vector<Integer>& coeffs);

// Throws DomainError when an intermediate denominator vanishes.
Rational eval(const ContinuedFraction& cf);

// All-even expansion of a normal-form slope. One exists exactly when
// alpha + beta is odd: that parity survives every step of the nearest-even
// division, and a terminal step 1/x with x even has it.
ContinuedFraction even_expansion(const Rational& slope);

// Strict expansion of minimal length, then minimal sum of |x_i|, then
// lexicographically smallest. The search visits continued-fraction tails
// whose numerator and denominator are bounded by strict_value_bound(alpha)
// and stops at strict_max_length(alpha) coefficients.
ContinuedFraction strict_expansion(const Rational& slope);
long strict_value_bound(const Integer& alpha);
std::size_t strict_max_length(const Integer& alpha);

// [..., -4, -1] -> [..., -2, 1].
ContinuedFraction rewrite_tail_41(const ContinuedFraction& cf);

// [..., a - 2, -1, -2, d] -> [..., a, d + 1].
ContinuedFraction rewrite_collapse(const ContinuedFraction& cf);

// Reduces [(-4,-1)^n] (n >= 1) or [(-4,-1)^n, -2, d] (n >= 0, d > 0) to
// [-2, d'] with d' > 0.
ContinuedFraction reduce_family_form(const ContinuedFraction& cf);

// "[-2,4]"
std::string to_string(const ContinuedFraction& cf);
// Accepts "[-2,4]" or "-2,4"; whitespace ignored.
ContinuedFraction parse_continued_fraction(std::string_view text, CfFlavor flavor = CfFlavor::plain);

}  // namespace monty

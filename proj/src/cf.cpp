#include "monty/cf.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <queue>
#include <sstream>
#include <tuple>

namespace monty {

bool is_even_sequence(const std::vector<Integer>& coeffs) {
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](const Integer& x) { return mpz_even_p(x.get_mpz_t()) != 0; });
}

bool is_strict_sequence(const std::vector<Integer>& coeffs) {
    // 0-based index i is the 1-based odd position j = i + 1.
    for (std::size_t i = 0; i < coeffs.size(); i += 2) {
        if (mpz_odd_p(coeffs[i].get_mpz_t())) return false;
        if (abs(coeffs[i]) == 2) {
            if (i + 1 >= coeffs.size()) return false;
            if (sign(coeffs[i + 1]) == sign(coeffs[i])) return false;
        }
    }
    return true;
}

ContinuedFraction::ContinuedFraction(std::vector<Integer> coeffs, CfFlavor flavor)
    : coeffs_(std::move(coeffs)), flavor_(flavor) {
    if (coeffs_.empty()) throw DomainError("continued fraction needs at least one coefficient");
    for (const auto& x : coeffs_)
        if (x == 0) throw DomainError("continued fraction coefficient is zero");
    if (flavor_ == CfFlavor::even && !is_even_sequence(coeffs_))
        throw DomainError("even continued fraction has an odd coefficient");
    if (flavor_ == CfFlavor::strict && !is_strict_sequence(coeffs_))
        throw DomainError("continued fraction is not strict");
}

Rational eval(const ContinuedFraction& cf) {
    const auto& x = cf.coeffs();
    Rational tail = x.back();
    for (std::size_t i = x.size() - 1; i-- > 0;) {
        if (tail == 0) throw DomainError("continued fraction " + to_string(cf) + " divides by zero");
        tail = Rational(x[i]) - 1 / tail;
    }
    if (tail == 0) throw DomainError("continued fraction " + to_string(cf) + " divides by zero");
    Rational value = 1 / tail;
    value.canonicalize();
    return value;
}

namespace {

void require_normal_slope(const Rational& slope) {
    const Slope s{slope.get_num(), slope.get_den()};
    if (!s.is_normal())
        throw DomainError("slope " + to_string(slope) + " is not in normal form (alpha > 1, |beta| < alpha)");
}

CfFlavor flavor_of(const std::vector<Integer>& coeffs, CfFlavor wanted) {
    if (wanted == CfFlavor::even && is_even_sequence(coeffs)) return wanted;
    if (wanted == CfFlavor::strict && is_strict_sequence(coeffs)) return wanted;
    return CfFlavor::plain;
}

}  // namespace

ContinuedFraction even_expansion(const Rational& slope) {
    require_normal_slope(slope);
    if (mpz_even_p(Integer(slope.get_num() + slope.get_den()).get_mpz_t()))
        throw DomainError("no even expansion exists for " + to_string(slope) +
                          " (numerator and denominator both odd)");
    // Invariant: the remaining tail has value num/den, den > 0, 0 < |num/den| < 1.
    Integer num = slope.get_num();
    Integer den = slope.get_den();
    std::vector<Integer> coeffs;
    while (num != 0) {
        // Nearest even integer to den/num.
        Integer a = den * sign(num);
        Integer b = abs(num);
        Integer half = floor_div(a + b, 2 * b);
        if ((a + b) % (2 * b) == 0 && mpz_odd_p(Integer(a / b).get_mpz_t()))
            throw DomainError("even expansion tie for " + to_string(slope));
        Integer x = 2 * half;
        coeffs.push_back(x);
        Integer next_num = x * num - den;
        den = num;
        num = next_num;
        if (den < 0) {
            den = -den;
            num = -num;
        }
    }
    return ContinuedFraction(std::move(coeffs), CfFlavor::even);
}

long strict_value_bound(const Integer& alpha) { return 4 * to_long(alpha, "slope denominator") + 4; }

std::size_t strict_max_length(const Integer& alpha) {
    return static_cast<std::size_t>(2 * to_long(alpha, "slope denominator") + 4);
}

namespace {

std::int64_t floor_div64(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div64(std::int64_t a, std::int64_t b) { return -floor_div64(-a, b); }

struct StrictState {
    std::int64_t num;  // tail value num/den
    std::int64_t den;  // > 0
    bool odd_position;
    int required_sign;  // 0, +1 or -1

    auto key() const { return std::tuple(num, den, odd_position, required_sign); }
};

struct StrictEntry {
    std::size_t length;
    std::int64_t abs_sum;
    std::vector<std::int64_t> path;
    bool terminal;
    StrictState state;

    auto rank() const { return std::tie(length, abs_sum, path); }
    bool operator>(const StrictEntry& other) const { return rank() > other.rank(); }
};

}  // namespace

ContinuedFraction strict_expansion(const Rational& slope) {
    require_normal_slope(slope);
    const std::int64_t bound = strict_value_bound(slope.get_den());
    const std::size_t max_length = strict_max_length(slope.get_den());

    // Values stay within `bound`, so 64-bit arithmetic is exact here.
    std::priority_queue<StrictEntry, std::vector<StrictEntry>, std::greater<>> queue;
    std::map<std::tuple<std::int64_t, std::int64_t, bool, int>, bool> settled;
    queue.push({0, 0, {}, false,
                {slope.get_num().get_si(), slope.get_den().get_si(), true, 0}});

    while (!queue.empty()) {
        StrictEntry entry = queue.top();
        queue.pop();
        if (entry.terminal) {
            std::vector<Integer> coeffs;
            for (auto x : entry.path) coeffs.emplace_back(static_cast<long>(x));
            return ContinuedFraction(std::move(coeffs), CfFlavor::strict);
        }
        if (settled.count(entry.state.key())) continue;
        settled[entry.state.key()] = true;
        if (entry.length >= max_length) continue;

        const StrictState& s = entry.state;
        // Next coefficient x satisfies 1/(tail) = x - (new tail), i.e. the
        // new tail is (x*num - den)/num.
        const std::int64_t p = s.num;
        const std::int64_t q = s.den;
        std::int64_t lo, hi;
        if (p > 0) {
            lo = ceil_div64(q - bound, p);
            hi = floor_div64(q + bound, p);
        } else {
            lo = ceil_div64(q + bound, p);
            hi = floor_div64(q - bound, p);
        }
        for (std::int64_t x = lo; x <= hi; ++x) {
            if (x == 0) continue;
            if (s.odd_position && (x % 2 != 0)) continue;
            if (s.required_sign != 0 && (x > 0 ? 1 : -1) != s.required_sign) continue;
            const bool pinned = s.odd_position && (x == 2 || x == -2);
            const std::int64_t n = x * p - q;
            StrictEntry next{entry.length + 1, entry.abs_sum + (x < 0 ? -x : x), entry.path, false, {}};
            next.path.push_back(x);
            if (n == 0) {
                if (pinned) continue;
                next.terminal = true;
                queue.push(std::move(next));
                continue;
            }
            StrictState t{p > 0 ? n : -n, p > 0 ? p : -p, !s.odd_position,
                          pinned ? (x > 0 ? -1 : 1) : 0};
            if (settled.count(t.key())) continue;
            next.state = t;
            queue.push(std::move(next));
        }
    }
    throw DomainError("no strict expansion of " + to_string(slope) + " found within length " +
                      std::to_string(max_length) + " and tail bound " + std::to_string(bound));
}

ContinuedFraction rewrite_tail_41(const ContinuedFraction& cf) {
    auto x = cf.coeffs();
    const std::size_t m = x.size();
    if (m < 2 || x[m - 2] != -4 || x[m - 1] != -1)
        throw DomainError("rewrite [...,-4,-1]: tail of " + to_string(cf) + " does not match");
    x[m - 2] = -2;
    x[m - 1] = 1;
    return ContinuedFraction(x, flavor_of(x, cf.flavor()));
}

ContinuedFraction rewrite_collapse(const ContinuedFraction& cf) {
    auto x = cf.coeffs();
    const std::size_t m = x.size();
    if (m < 4 || x[m - 3] != -1 || x[m - 2] != -2)
        throw DomainError("rewrite [...,a-2,-1,-2,d]: tail of " + to_string(cf) + " does not match");
    const Integer a = x[m - 4] + 2;
    const Integer d = x[m - 1] + 1;
    if (a == 0 || d == 0)
        throw DomainError("rewrite [...,a-2,-1,-2,d] on " + to_string(cf) + " produces a zero coefficient");
    x.resize(m - 2);
    x[m - 4] = a;
    x[m - 3] = d;
    return ContinuedFraction(x, flavor_of(x, cf.flavor()));
}

ContinuedFraction reduce_family_form(const ContinuedFraction& cf) {
    const auto& x = cf.coeffs();
    const std::size_t m = x.size();
    auto pairs_ok = [&](std::size_t count) {
        for (std::size_t i = 0; i < count; ++i)
            if (x[2 * i] != -4 || x[2 * i + 1] != -1) return false;
        return true;
    };
    const bool only_pairs = m >= 2 && m % 2 == 0 && pairs_ok(m / 2);
    const bool pairs_then_tail = m >= 2 && m % 2 == 0 && pairs_ok(m / 2 - 1) && x[m - 2] == -2 && x[m - 1] > 0;
    if (!only_pairs && !pairs_then_tail)
        throw DomainError(to_string(cf) + " is not of the form [(-4,-1)^n] or [(-4,-1)^n,-2,d]");

    ContinuedFraction current = only_pairs ? rewrite_tail_41(cf) : cf;
    while (current.size() > 2) current = rewrite_collapse(current);
    return ContinuedFraction(current.coeffs(), CfFlavor::strict);
}

std::string to_string(const ContinuedFraction& cf) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < cf.size(); ++i) {
        if (i) out << ',';
        out << cf.coeffs()[i];
    }
    out << ']';
    return out.str();
}

ContinuedFraction parse_continued_fraction(std::string_view text, CfFlavor flavor) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    std::string_view body = compact;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw ParseError("unterminated '['", compact.size());
        body = body.substr(1, body.size() - 2);
    }
    std::vector<Integer> coeffs;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        if (comma == std::string_view::npos) comma = body.size();
        std::string item(body.substr(start, comma - start));
        const bool sign_only = item == "-" || item == "+";
        if (item.empty() || sign_only ||
            item.find_first_not_of("0123456789", (item[0] == '-' || item[0] == '+') ? 1 : 0) != std::string::npos)
            throw ParseError("expected integer coefficient", start);
        if (item[0] == '+') item.erase(0, 1);
        coeffs.emplace_back(item);
        start = comma + 1;
    }
    return ContinuedFraction(std::move(coeffs), flavor);
}

}  // namespace monty

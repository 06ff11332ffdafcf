#include "monty/laurent.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>

namespace monty {

LaurentPoly::LaurentPoly(const Integer& c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const Integer& c, long exponent) {
    LaurentPoly p;
    if (c != 0) p.terms_[exponent] = c;
    return p;
}

Integer LaurentPoly::coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

long LaurentPoly::min_exponent() const {
    if (is_zero()) throw DomainError("zero polynomial has no exponent range");
    return terms_.begin()->first;
}

long LaurentPoly::max_exponent() const {
    if (is_zero()) throw DomainError("zero polynomial has no exponent range");
    return terms_.rbegin()->first;
}

Integer LaurentPoly::leading() const {
    if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
}

Integer LaurentPoly::trailing() const {
    if (is_zero()) throw DomainError("zero polynomial has no trailing coefficient");
    return terms_.begin()->second;
}

Integer LaurentPoly::content() const {
    Integer g = 0;
    for (const auto& [e, c] : terms_) g = gcd(g, c);
    return g;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_[e + k] = c;
    return p;
}

LaurentPoly LaurentPoly::divide_exact(const Integer& d) const {
    if (d == 0) throw DomainError("polynomial division by zero");
    LaurentPoly p;
    for (const auto& [e, c] : terms_) {
        if (c % d != 0) throw DomainError("polynomial coefficient not divisible by " + to_string(d));
        p.terms_[e] = c / d;
    }
    return p;
}

void LaurentPoly::add_term(long exponent, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) {
    LaurentPoly product;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : q.terms_) product.add_term(e1 + e2, c1 * c2);
    terms_ = std::move(product.terms_);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
LaurentPoly neg(const LaurentPoly& p) { return -p; }

Rational eval_int(const LaurentPoly& p, const Integer& x) {
    if (x == 0) throw DomainError("Laurent polynomial evaluated at 0");
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) {
        Integer power;
        mpz_pow_ui(power.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
        Rational term = e < 0 ? Rational(c, power) : Rational(c * power);
        term.canonicalize();  // power may be negative
        sum += term;
    }
    sum.canonicalize();
    return sum;
}

LaurentPoly normalize_symmetric(const LaurentPoly& p) {
    if (p.is_zero()) throw DomainError("cannot normalize the zero polynomial");
    const long total = p.min_exponent() + p.max_exponent();
    if (total % 2 != 0)
        throw DomainError("polynomial " + to_string(p) + " is not symmetric up to units (odd exponent span)");
    LaurentPoly q = p.shifted(-total / 2);
    int mirror_sign = 0;
    for (const auto& [e, c] : q.terms()) {
        const Integer partner = q.coeff(-e);
        int s = partner == c ? 1 : (partner == -c ? -1 : 0);
        if (s == 0 || (mirror_sign != 0 && s != mirror_sign))
            throw DomainError("polynomial " + to_string(p) + " is not palindromic up to units");
        mirror_sign = s;
    }
    return q.leading() < 0 ? -q : q;
}

bool lspace_coefficient_form(const LaurentPoly& p, bool endpoint_rule) {
    if (p.is_zero()) return false;
    int previous = 0;
    for (const auto& [e, c] : p.terms()) {
        if (c != 1 && c != -1) return false;
        const int s = sign(c);
        if (s == previous) return false;
        previous = s;
    }
    if (endpoint_rule && (p.leading() != 1 || p.trailing() != 1)) return false;
    return true;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const long e = it->first;
        const Integer& c = it->second;
        const Integer magnitude = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            out << magnitude;
            continue;
        }
        if (magnitude != 1) out << magnitude;
        out << 't';
        if (e != 1) out << '^' << e;
    }
    return out.str();
}

LaurentPoly parse_laurent(const std::string& text) {
    // Whitespace is dropped, but positions in errors refer to `text`.
    std::string s;
    std::vector<std::size_t> origin;
    for (std::size_t k = 0; k < text.size(); ++k) {
        const auto c = static_cast<unsigned char>(text[k]);
        if (std::isspace(c)) continue;
        if (std::isdigit(c) && !s.empty() && std::isdigit(static_cast<unsigned char>(s.back())) && origin.back() + 1 != k)
            throw ParseError("digits separated by whitespace", k);
        s.push_back(text[k]);
        origin.push_back(k);
    }
    if (s.empty()) throw ParseError("empty polynomial", 0);
    auto fail = [&](const char* what, std::size_t pos) -> ParseError {
        return ParseError(what, pos < origin.size() ? origin[pos] : text.size());
    };
    LaurentPoly result;
    std::size_t i = 0;
    auto read_int = [&](std::size_t& pos, bool allow_sign) {
        const std::size_t start = pos;
        std::string digits;
        if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            if (s[pos] == '-') digits.push_back('-');
            ++pos;
        }
        const std::size_t first = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits.push_back(s[pos++]);
        if (pos == first) throw fail("expected integer", start);
        return Integer(digits);
    };
    if (s == "0") return result;
    while (i < s.size()) {
        int term_sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            term_sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw fail("expected '+' or '-'", i);
        }
        Integer c = 1;
        bool has_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            c = read_int(i, false);
            has_coeff = true;
        }
        long exponent = 0;
        if (i < s.size() && s[i] == '*') {
            if (!has_coeff) throw fail("unexpected '*'", i);
            ++i;
            if (i >= s.size() || s[i] != 't') throw fail("expected 't'", i);
        }
        if (i < s.size() && s[i] == 't') {
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                exponent = to_long(read_int(i, true), "exponent");
            }
        } else if (!has_coeff) {
            throw fail("expected coefficient or 't'", i);
        }
        result += LaurentPoly::monomial(term_sign * c, exponent);
    }
    return result;
}

PolyMatrix::PolyMatrix(std::size_t n) : n_(n), entries_(n * n) {
    if (n == 0) throw DomainError("polynomial matrix must have positive dimension");
}

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic for n < 2^64 with these bases.
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Primes below 2^31 so that products of residues fit in 64 bits.
class PrimeSource {
public:
    u64 next() {
        do {
            candidate_ -= 2;
        } while (!is_prime_u64(candidate_));
        return candidate_;
    }

private:
    u64 candidate_ = (1ull << 31) + 1;
};

u64 residue(const Integer& c, u64 p) {
    return static_cast<u64>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p)));
}

u64 det_mod(std::vector<u64> a, std::size_t n, u64 p) {
    u64 result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot * n + col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a[pivot * n + j], a[col * n + j]);
            result = p - result;
            if (result == p) result = 0;
        }
        const u64 pv = a[col * n + col];
        result = result * pv % p;
        const u64 inv = powmod(pv, p - 2, p);
        for (std::size_t row = col + 1; row < n; ++row) {
            const u64 f = a[row * n + col] * inv % p;
            if (f == 0) continue;
            for (std::size_t j = col; j < n; ++j) {
                const u64 v = a[col * n + j];
                if (v == 0) continue;
                a[row * n + j] = (a[row * n + j] + (p - f) * v) % p;
            }
        }
    }
    return result;
}

// Coefficients (low to high) of the degree <= D polynomial through
// (i, values[i]) for i = 0..D, modulo p.
std::vector<u64> interpolate(const std::vector<u64>& values, u64 p) {
    const std::size_t count = values.size();
    std::vector<u64> c = values;  // divided differences in place
    for (std::size_t level = 1; level < count; ++level) {
        const u64 inv = powmod(level % p, p - 2, p);
        for (std::size_t i = count - 1; i >= level; --i) {
            c[i] = (c[i] + p - c[i - 1]) % p * inv % p;
            if (i == level) break;
        }
    }
    std::vector<u64> poly(count, 0);
    poly[0] = c[count - 1];
    std::size_t degree = 0;
    for (std::size_t k = count - 1; k-- > 0;) {
        // poly = poly * (x - k) + c[k]
        const u64 root = k % p;
        for (std::size_t j = degree + 1; j-- > 0;) {
            poly[j + 1] = (poly[j + 1] + poly[j]) % p;
            poly[j] = mulmod(poly[j], p - root, p);
        }
        ++degree;
        poly[0] = (poly[0] + c[k]) % p;
    }
    return poly;
}

}  // namespace

LaurentPoly det(const PolyMatrix& m) {
    const std::size_t n = m.size();
    long total_shift = 0;
    std::size_t degree_bound = 0;
    Integer coeff_bound = 1;
    std::vector<long> row_shift(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        bool any = false;
        long lo = 0, hi = 0;
        Integer norm = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& entry = m.at(i, j);
            if (entry.is_zero()) continue;
            lo = any ? std::min(lo, entry.min_exponent()) : entry.min_exponent();
            hi = any ? std::max(hi, entry.max_exponent()) : entry.max_exponent();
            any = true;
            for (const auto& [e, c] : entry.terms()) norm += abs(c);
        }
        if (!any) return LaurentPoly();
        row_shift[i] = lo;
        total_shift += lo;
        degree_bound += static_cast<std::size_t>(hi - lo);
        coeff_bound *= norm;
    }

    const std::size_t points = degree_bound + 1;
    std::vector<Integer> lifted(points, 0);
    Integer modulus = 1;
    PrimeSource primes;
    const Integer target = 2 * coeff_bound;
    while (modulus <= target) {
        const u64 p = primes.next();
        if (points >= p) throw DomainError("polynomial determinant degree too large");
        // Entries as nonnegative-exponent polynomials mod p.
        std::vector<std::vector<std::pair<std::size_t, u64>>> shifted(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (const auto& [e, c] : m.at(i, j).terms())
                    shifted[i * n + j].push_back({static_cast<std::size_t>(e - row_shift[i]), residue(c, p)});

        std::vector<u64> values(points);
        std::vector<u64> a(n * n);
        for (std::size_t x = 0; x < points; ++x) {
            for (std::size_t k = 0; k < n * n; ++k) {
                u64 v = 0;
                for (const auto& [e, c] : shifted[k]) v = (v + mulmod(c, powmod(x, e, p), p)) % p;
                a[k] = v;
            }
            values[x] = det_mod(a, n, p);
        }
        const std::vector<u64> coeffs = interpolate(values, p);

        // Incremental CRT: lifted = lifted + modulus * ((r - lifted) / modulus mod p).
        const Integer pz(static_cast<unsigned long>(p));
        const Integer inv = mod_inverse(mod_floor(modulus, pz), pz);
        for (std::size_t k = 0; k < points; ++k) {
            const Integer r(static_cast<unsigned long>(coeffs[k]));
            const Integer step = mod_floor((r - lifted[k]) * inv, pz);
            lifted[k] += modulus * step;
        }
        modulus *= pz;
    }

    LaurentPoly result;
    const Integer half = modulus / 2;
    for (std::size_t k = 0; k < points; ++k) {
        Integer c = lifted[k];
        if (c > half) c -= modulus;
        result += LaurentPoly::monomial(c, static_cast<long>(k) + total_shift);
    }
    return result;
}

}  // namespace monty

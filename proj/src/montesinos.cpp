#include "monty/montesinos.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace monty {

namespace {

bool is_even(const Integer& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

Rational total_value(const MontesinosLink& k) {
    Rational sum = k.e;
    for (const auto& s : k.slopes) sum += s.value();
    sum.canonicalize();
    return sum;
}

// Normal slope equal to beta/alpha mod 1, with the integer part returned.
Slope split_slope(const Integer& beta, const Integer& alpha, Integer& whole) {
    whole = trunc_div(beta, alpha);
    return {beta - whole * alpha, alpha};
}

}  // namespace

MontesinosLink to_montesinos(const LinkExpr& expr) {
    struct Visitor {
        MontesinosLink operator()(const MontesinosLink& m) const { return m; }
        MontesinosLink operator()(const Pretzel& p) const {
            MontesinosLink m{{}, 0};
            for (const auto& q : p.twists) {
                if (abs(q) == 1)
                    m.e += q;
                else
                    m.slopes.push_back({Integer(sign(q)), abs(q)});
            }
            return m;
        }
        MontesinosLink operator()(const TwoBridge& b) const {
            // N(alpha/beta) only depends on beta mod alpha; pick a
            // representative q with |q| > 1 so that alpha/q has a normal
            // fractional part.
            Integer q = b.beta;
            if (abs(q) <= 1) q = b.beta + b.alpha;
            if (abs(q) <= 1) q = b.beta - b.alpha;
            const Integer den = abs(q);
            const Integer num = b.alpha * sign(q);
            Integer whole;
            Slope s = split_slope(num, den, whole);
            return {{s}, whole};
        }
    };
    return std::visit(Visitor{}, expr);
}

MontesinosLink mirror(const MontesinosLink& k) {
    MontesinosLink m = k;
    for (auto& s : m.slopes) s.beta = -s.beta;
    m.e = -m.e;
    return m;
}

MontesinosLink canonicalize(const MontesinosLink& k) {
    std::size_t even_count = 0, even_at = 0;
    for (std::size_t i = 0; i < k.slopes.size(); ++i) {
        if (!k.slopes[i].is_normal())
            throw DomainError("slope " + to_string(k.slopes[i].beta) + "/" + to_string(k.slopes[i].alpha) +
                              " is not in normal form");
        if (is_even(k.slopes[i].alpha)) {
            ++even_count;
            even_at = i;
        }
    }
    if (even_count > 1)
        throw DomainError(print(k) + " has " + std::to_string(even_count) +
                          " even denominators; a knot has at most one");
    MontesinosLink c = k;
    if (even_count == 1)
        std::rotate(c.slopes.begin(), c.slopes.begin() + static_cast<std::ptrdiff_t>(even_at), c.slopes.end());
    return c;
}

MontesinosType montesinos_type(const MontesinosLink& canonical) {
    if (!canonical.slopes.empty() && is_even(canonical.slopes.front().alpha)) return MontesinosType::even;
    return MontesinosType::odd;
}

std::string to_string(MontesinosType t) { return t == MontesinosType::odd ? "odd" : "even"; }

Integer signed_determinant(const MontesinosLink& k) {
    Rational value = total_value(k);
    for (const auto& s : k.slopes) value *= s.alpha;
    value.canonicalize();
    if (value.get_den() != 1)
        throw DomainError("determinant formula is not integral for " + print(k) + "; slopes not normalized");
    return value.get_num();
}

Integer determinant_formula(const MontesinosLink& k) { return abs(signed_determinant(k)); }

MontesinosLink odd_family_member(const std::vector<long>& d) {
    MontesinosLink k{{}, 1};
    for (long di : d) {
        if (di <= 0) throw DomainError("odd family parameters must be positive");
        k.slopes.push_back({Integer(-di), Integer(2 * di + 1)});
    }
    return k;
}

MontesinosLink even_family_member(const std::vector<long>& m) {
    MontesinosLink k{{}, 2};
    for (long mi : m) {
        if (mi <= 0) throw DomainError("even family parameters must be positive");
        k.slopes.push_back({Integer(-mi), Integer(mi + 1)});
    }
    return k;
}

std::string to_string(const FamilyMembership& f) {
    std::ostringstream out;
    auto list = [&](const std::vector<long>& v) {
        out << '(';
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
        out << ')';
    };
    if (const auto* o = std::get_if<OddTight>(&f.kind)) {
        out << "odd-tight d=";
        list(o->d);
    } else if (const auto* e = std::get_if<EvenTight>(&f.kind)) {
        out << "even-tight m=";
        list(e->m);
    } else if (const auto* t = std::get_if<TwoBridgeTorus>(&f.kind)) {
        out << "torus T(2," << 2 * t->n + 1 << ')';
    } else {
        out << "none (" << std::get<NotInFamily>(f.kind).reason << ')';
        return out.str();
    }
    if (f.mirrored) out << " mirrored";
    return out.str();
}

namespace {

std::optional<OddTight> match_odd(const MontesinosLink& k) {
    if (k.slopes.empty()) return std::nullopt;
    std::vector<long> d;
    Rational target = 1;
    for (const auto& s : k.slopes) {
        if (is_even(s.alpha)) return std::nullopt;
        const Integer di = (s.alpha - 1) / 2;
        if (mod_floor(s.beta + di, s.alpha) != 0) return std::nullopt;
        d.push_back(to_long(di, "family parameter"));
        target -= Rational(di, s.alpha);
    }
    target.canonicalize();
    if (total_value(k) != target) return std::nullopt;
    std::sort(d.begin(), d.end());
    return OddTight{d};
}

std::optional<EvenTight> match_even(const MontesinosLink& k) {
    if (k.slopes.empty() || !is_even(k.slopes.front().alpha)) return std::nullopt;
    std::vector<long> m;
    Rational target = 2;
    for (std::size_t i = 0; i < k.slopes.size(); ++i) {
        const auto& s = k.slopes[i];
        if (i > 0 && is_even(s.alpha)) return std::nullopt;
        const Integer mi = s.alpha - 1;
        if (mod_floor(s.beta - 1, s.alpha) != 0) return std::nullopt;
        m.push_back(to_long(mi, "family parameter"));
        target -= Rational(mi, s.alpha);
    }
    target.canonicalize();
    if (total_value(k) != target) return std::nullopt;
    std::sort(m.begin() + 1, m.end());
    return EvenTight{m};
}

}  // namespace

FamilyMembership recognize_family(const MontesinosLink& canonical) {
    if (canonical.length() <= 2) {
        const TwoBridge b = two_bridge_reduce(canonical);
        if (b.alpha == 0 || is_even(b.alpha)) return {NotInFamily{"two-bridge link, not a knot"}, false};
        const long n = torus_index(b);
        if (n == 0) return {NotInFamily{"two-bridge knot other than T(2,N)"}, false};
        const bool mirrored = n > 1 && b.beta == 1;
        return {TwoBridgeTorus{(n - 1) / 2}, mirrored};
    }
    const MontesinosLink mirrored = canonicalize(mirror(canonical));
    for (bool flip : {false, true}) {
        const MontesinosLink& k = flip ? mirrored : canonical;
        if (auto o = match_odd(k)) return {*o, flip};
        if (auto e = match_even(k)) return {*e, flip};
    }
    return {NotInFamily{"slopes or Euler number outside both tight fibered families"}, false};
}

long genus_odd_family(const std::vector<long>& d) {
    long sum = 0;
    for (long x : d) {
        if (x <= 0) throw DomainError("odd family parameters must be positive");
        sum += x;
    }
    if (sum % 2 != 0) throw DomainError("odd family with odd parameter sum is a two-component link");
    return sum / 2;
}

long genus_even_family(const std::vector<long>& m) {
    if (m.empty()) throw DomainError("even family needs at least one parameter");
    long sum = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] <= 0) throw DomainError("even family parameters must be positive");
        if ((m[i] % 2 != 0) != (i == 0))
            throw DomainError("even family needs m_1 odd and every other m_i even");
        sum += m[i];
    }
    return sum / 2;
}

long genus_odd_hm(const MontesinosLink& k, const std::vector<ContinuedFraction>& strict_cfs, const Integer& e,
                  bool fibered_asserted) {
    if (!fibered_asserted) throw DomainError("genus formula for strict expansions needs a fibered knot");
    if (strict_cfs.size() != k.slopes.size())
        throw DomainError("expected one strict continued fraction per slope");
    Integer twice = abs(e) - 1;
    Rational total = e;
    for (std::size_t i = 0; i < strict_cfs.size(); ++i) {
        const auto& cf = strict_cfs[i];
        if (!is_strict_sequence(cf.coeffs())) throw DomainError(to_string(cf) + " is not strict");
        if (cf.size() % 2 != 0) throw DomainError(to_string(cf) + " has odd length");
        const Rational v = eval(cf);
        const Rational diff = v - k.slopes[i].value();
        if (diff.get_den() != 1)
            throw DomainError(to_string(cf) + " does not represent slope " + to_string(k.slopes[i].value()));
        total += v;
        for (std::size_t j = 1; j < cf.size(); j += 2) twice += cf.coeffs()[j];
    }
    total.canonicalize();
    if (total != total_value(k)) throw DomainError("continued fractions and e do not present " + print(k));
    if (twice < 0 || !is_even(twice))
        throw DomainError("genus formula gives non-integer or negative value " + to_string(Rational(twice, 2)));
    return to_long(twice / 2, "genus");
}

Pretzel montesinos_to_pretzel(const std::vector<long>& m) {
    if (m.size() < 2) throw DomainError("pretzel conversion needs at least two parameters");
    Pretzel p;
    for (long mi : m) p.twists.emplace_back(mi + 1);
    for (std::size_t i = 2; i < m.size(); ++i) p.twists.emplace_back(-1);
    return p;
}

TwoBridge two_bridge_reduce(const MontesinosLink& k) {
    if (k.length() > 2) throw DomainError("two-bridge reduction needs length at most 2");
    Integer p, q;
    if (k.slopes.empty()) {
        p = k.e;
        q = 1;
    } else {
        // Fold e into the first slope: N(b1'/a1 + b2/a2).
        const Integer a1 = k.slopes[0].alpha;
        const Integer b1 = k.slopes[0].beta + k.e * a1;
        Integer a2 = 1, b2 = 0;
        if (k.length() == 2) {
            a2 = k.slopes[1].alpha;
            b2 = k.slopes[1].beta;
        }
        // a2 * b2' - b2 * a2' = 1
        Integer x, y;
        extended_gcd(a2, -b2, x, y);
        const Integer b2p = x, a2p = y;
        p = a1 * b2 + a2 * b1;
        q = a1 * b2p + b1 * a2p;
    }
    if (p < 0) {
        p = -p;
        q = -q;
    }
    if (p == 0) return {0, 1};
    if (p == 1) return {1, 0};
    const Integer r = mod_floor(q, p);
    return {p, std::min(r, mod_inverse(r, p))};
}

long torus_index(const TwoBridge& b) {
    if (b.alpha == 1) return 1;
    if (b.alpha < 2) return 0;
    if (b.beta == 1 || b.beta == b.alpha - 1) return to_long(b.alpha, "torus index");
    return 0;
}

}  // namespace monty

#include "monty/diagram.hpp"
#include "monty/montesinos.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <numeric>
#include <random>

using namespace monty;

namespace {

PlanarDiagram diagram_of(const char* text) { return synthesize(parse(text)); }

LaurentPoly alex_of(const char* text) { return alexander(diagram_of(text)); }

// Fox matrix rebuilt from the PD code with its own arc labelling, then the
// first row and column are struck out instead of the last and the minor is
// expanded by cofactors.
LaurentPoly alexander_oracle(const PlanarDiagram& d) {
    const std::size_t n = d.crossings.size();
    if (n <= 1) return 1;
    std::vector<long> parent(d.edge_count() + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<long(long)> find = [&](long x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& c : d.crossings) parent[find(c.edges[1])] = find(c.edges[3]);
    std::map<long, std::size_t> arc;
    for (long e = 1; e <= static_cast<long>(d.edge_count()); ++e) arc.emplace(find(e), arc.size());
    REQUIRE(arc.size() == n);

    const LaurentPoly t = LaurentPoly::t();
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = d.crossings[i];
        const std::size_t over = arc[find(c.edges[1])], in = arc[find(c.edges[0])], out = arc[find(c.edges[2])];
        m[i][over] += 1 - t;
        m[i][in] += c.sign > 0 ? t : LaurentPoly(-1);
        m[i][out] += c.sign > 0 ? LaurentPoly(-1) : t;
    }
    std::vector<std::vector<LaurentPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) minor.emplace_back(m[i].begin() + 1, m[i].end());
    LaurentPoly p = oracle::cofactor_det(minor);
    return normalize_symmetric(p.divide_exact(p.content()));
}

std::vector<long> random_d(std::mt19937& rng, std::size_t r, long hi) {
    std::uniform_int_distribution<long> pick(1, hi);
    std::vector<long> d(r);
    for (auto& x : d) x = pick(rng);
    return d;
}

}  // namespace

TEST_SUITE("diagram") {

TEST_CASE("crossing counts and components") {
    const auto p237 = diagram_of("P(-2,3,7)");
    CHECK(p237.crossings.size() == 12);
    CHECK(components(p237) == 1);
    CHECK(components(diagram_of("B(3/1)")) == 1);
    CHECK(components(diagram_of("M(-1/3|1)")) == 2);
    CHECK(components(diagram_of("M(-1/3,-1/3,-1/3|1)")) == 2);
    CHECK(components(diagram_of("B(4/1)")) == 2);
    CHECK(diagram_of("P(-2,3,7)").provenance.has_value());
}

TEST_CASE("synthesized diagrams are valid") {
    for (const char* s : {"P(-2,3,7)", "M(3/4,-2/5,1/3|3)", "B(5/3)", "M(|0)", "M(|1)", "M(1/2|0)"})
        CHECK_NOTHROW(validate(diagram_of(s)));
}

TEST_CASE("crossingless diagrams") {
    const auto unknot = diagram_of("M(|1)");
    CHECK(components(unknot) == 1);
    CHECK(goeritz_det(unknot) == 1);
    CHECK(alexander(unknot) == LaurentPoly(1));
    const auto unlink = diagram_of("M(|0)");
    CHECK(components(unlink) == 2);
    CHECK(goeritz_det(unlink) == 0);
}

TEST_CASE("writhe of torus-type two-bridge knots") {
    CHECK(std::abs(diagram_of("B(3/1)").writhe()) == 3);
    CHECK(std::abs(diagram_of("B(7/1)").writhe()) == 7);
    CHECK(diagram_of("B(3/1)").writhe() == -diagram_of("B(-3/1)").writhe());
}

TEST_CASE("goeritz determinant examples") {
    CHECK(goeritz_det(diagram_of("M(-1/3,-2/5,-3/7|1)")) == 17);
    CHECK(goeritz_det(diagram_of("M(-1/3,-1/3,-2/5|1)")) == 3);
    CHECK(goeritz_det(diagram_of("M(-1/3,-1/3,-1/3|1)")) == 0);
    CHECK(goeritz_det(diagram_of("M(3/4,-2/5,1/3|3)")) == 221);
    CHECK(goeritz_det(diagram_of("B(3/1)")) == 3);
    CHECK(goeritz_det(diagram_of("B(5/3)")) == 5);
    CHECK(goeritz_det(diagram_of("P(-2,3,7)")) == 1);
    CHECK(goeritz_det(diagram_of("M(-3/4,-2/3,-4/5|2)")) == 13);
}

TEST_CASE("goeritz matrix is symmetric") {
    const auto d = diagram_of("M(3/4,-2/5,1/3|3)");
    const auto g = goeritz_matrix(d);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) CHECK(g[i][j] == g[j][i]);
    CHECK(abs(oracle::cofactor_det(g)) == 221);
}

TEST_CASE("alexander examples") {
    const LaurentPoly t = LaurentPoly::t(), ti = LaurentPoly::monomial(1, -1);
    CHECK(alex_of("B(3/1)") == t - 1 + ti);
    CHECK(alex_of("B(-3/1)") == t - 1 + ti);
    CHECK(alex_of("B(5/3)") == t - 3 + ti);
    CHECK(to_string(alex_of("B(5/1)")) == "t^2 - t + 1 - t^-1 + t^-2");
    CHECK(to_string(alex_of("M(-1/3,-1/3,-2/5|1)")) == "t^2 + t - 3 + t^-1 + t^-2");
    CHECK(to_string(alex_of("P(-2,3,7)")) == "t^5 - t^4 + t^2 - t + 1 - t^-1 + t^-2 - t^-4 + t^-5");
    CHECK_THROWS_AS(alex_of("B(4/1)"), DomainError);
}

TEST_CASE("alexander matches an independent minor") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> alpha(2, 7), len(1, 3), e(-2, 2);
    int knots = 0;
    while (knots < 40) {
        MontesinosLink m{{}, e(rng)};
        for (long i = len(rng); i > 0; --i) {
            const long a = alpha(rng);
            std::uniform_int_distribution<long> b(1 - a, a - 1);
            long beta;
            do beta = b(rng);
            while (gcd(Integer(beta), Integer(a)) != 1);
            m.slopes.push_back({beta, a});
        }
        const auto d = synthesize(LinkExpr(m));
        if (components(d) != 1 || d.crossings.size() > 9) continue;
        ++knots;
        CAPTURE(print(m));
        CHECK(alexander(d) == alexander_oracle(d));
    }
}

TEST_CASE("export and import round trip") {
    for (const char* s : {"P(-2,3,7)", "M(3/4,-2/5,1/3|3)", "M(|0)", "B(3/1)"}) {
        const auto d = diagram_of(s);
        const auto back = import_diagram(export_diagram(d));
        CHECK(back.crossings == d.crossings);
        CHECK(back.free_loops == d.free_loops);
    }
}

TEST_CASE("import rejects malformed codes") {
    CHECK_THROWS_AS(import_diagram("1 2 3 +1\n"), DomainError);
    CHECK_THROWS_AS(import_diagram("1 2 3 4 +2\n"), DomainError);
    CHECK_THROWS_AS(import_diagram("1 1 2 3 +1\n"), DomainError);
    CHECK_THROWS_AS(import_diagram("1 2 3 9 +1\n2 1 4 3 -1\n"), DomainError);
}

TEST_CASE("odd-type family tuples close to a knot exactly when the sum is even") {
    std::mt19937 rng(43);
    for (std::size_t r = 3; r <= 5; ++r)
        for (int trial = 0; trial < 12; ++trial) {
            const auto d = random_d(rng, r, 4);
            const long sum = std::accumulate(d.begin(), d.end(), 0L);
            CAPTURE(sum);
            CHECK((components(synthesize(LinkExpr(odd_family_member(d)))) == 1) == (sum % 2 == 0));
        }
}

TEST_CASE("montesinos and pretzel presentations give the same invariants") {
    for (long m1 : {1, 3})
        for (long m2 : {2, 4})
            for (long m3 : {2, 4}) {
                const std::vector<long> m{m1, m2, m3};
                const auto a = synthesize(LinkExpr(even_family_member(m)));
                const auto b = synthesize(LinkExpr(montesinos_to_pretzel(m)));
                CHECK(goeritz_det(a) == goeritz_det(b));
                CHECK(alexander(a) == alexander(b));
            }
}

}

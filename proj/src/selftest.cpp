#include "monty/pipeline.hpp"

#include <random>
#include <sstream>

namespace monty {

namespace {

class Checker {
public:
    explicit Checker(SelftestReport& report) : report_(report) {}

    void expect(bool ok, const std::string& what) {
        ++report_.checks;
        if (!ok) report_.failures.push_back(what);
    }

    // Records an exception thrown by a check as a failure.
    template <typename F>
    void guarded(const std::string& what, F&& body) {
        try {
            body();
        } catch (const std::exception& ex) {
            ++report_.checks;
            report_.failures.push_back(what + ": " + ex.what());
        }
    }

private:
    SelftestReport& report_;
};

std::vector<MontesinosLink> sample_knots() {
    std::vector<MontesinosLink> knots;
    std::mt19937 rng(20240607);
    std::uniform_int_distribution<int> length(3, 4);
    std::uniform_int_distribution<int> denominator(2, 9);
    std::uniform_int_distribution<int> euler(-2, 2);
    while (knots.size() < 40) {
        MontesinosLink k{{}, euler(rng)};
        const int r = length(rng);
        int evens = 0;
        for (int i = 0; i < r; ++i) {
            const long alpha = denominator(rng);
            std::uniform_int_distribution<long> numerator(1 - alpha, alpha - 1);
            long beta = 0;
            do beta = numerator(rng);
            while (gcd(Integer(beta), Integer(alpha)) != 1);
            evens += alpha % 2 == 0;
            k.slopes.push_back({beta, alpha});
        }
        if (evens > 1) continue;
        if (components(synthesize(k)) != 1) continue;
        knots.push_back(k);
    }
    return knots;
}

}  // namespace

SelftestReport selftest(FaultInjection fault) {
    SelftestReport report;
    Checker check(report);
    const bool keep_abs = fault != FaultInjection::drop_determinant_abs;
    const bool endpoint_rule = fault != FaultInjection::drop_alternation_endpoint_rule;
    auto formula = [&](const MontesinosLink& k) { return keep_abs ? determinant_formula(k) : signed_determinant(k); };

    // Paper regression values.
    const struct {
        const char* text;
        long det;
        std::size_t components;
    } regressions[] = {
        {"M(-1/3,-2/5,-3/7|1)", 17, 1},
        {"M(-1/3,-1/3,-2/5|1)", 3, 1},
        {"M(-1/3,-1/3,-1/3|1)", 0, 2},
        {"M(3/4,-2/5,1/3|3)", 221, 1},
        {"P(-2,3,7)", 1, 1},
        {"B(3/1)", 3, 1},
    };
    for (const auto& r : regressions) {
        check.guarded(r.text, [&] {
            const LinkExpr expr = parse(r.text);
            const MontesinosLink k = to_montesinos(expr);
            const PlanarDiagram d = synthesize(expr);
            const Integer f = formula(k);
            check.expect(f == r.det, std::string(r.text) + ": formula det " + to_string(f) + " != " +
                                         std::to_string(r.det));
            check.expect(goeritz_det(d) == r.det, std::string(r.text) + ": Goeritz det disagrees");
            check.expect(components(d) == r.components, std::string(r.text) + ": component count");
        });
    }

    // 10_145 and the coefficient-form test.
    check.guarded("10_145", [&] {
        const LaurentPoly delta = alexander(synthesize(parse("M(-1/3,-1/3,-2/5|1)")));
        check.expect(to_string(delta) == "t^2 + t - 3 + t^-1 + t^-2", "10_145 Alexander polynomial " + to_string(delta));
        check.expect(!lspace_coefficient_form(delta, endpoint_rule), "10_145 passes the coefficient-form test");
        const LaurentPoly trefoil = alexander(synthesize(parse("B(3/1)")));
        check.expect(lspace_coefficient_form(trefoil, endpoint_rule), "trefoil fails the coefficient-form test");
    });

    // Classification anchors.
    const struct {
        const char* text;
        Verdict verdict;
    } anchors[] = {
        {"P(-2,3,7)", Verdict::lspace},
        {"B(3/1)", Verdict::lspace},
        {"B(5/3)", Verdict::not_lspace},
        {"M(-1/3,-1/3,-2/5|1)", Verdict::not_lspace},
        {"M(-1/3,-1/3,-1/3|1)", Verdict::not_applicable_link},
    };
    for (const auto& a : anchors) {
        check.guarded(a.text, [&] {
            const auto report = classify(parse(a.text));
            check.expect(report.verdict == a.verdict, std::string(a.text) + ": verdict " + to_string(report.verdict));
        });
    }

    // Three-way determinant agreement on sampled knots.
    for (const auto& k : sample_knots()) {
        const std::string name = print(k);
        check.guarded(name, [&] {
            const PlanarDiagram d = synthesize(k);
            const Integer f = formula(k);
            const Integer g = goeritz_det(d);
            const Integer a = abs(eval_int(alexander(d), -1).get_num());
            check.expect(f == g && g == a, name + ": formula " + to_string(f) + ", Goeritz " + to_string(g) +
                                               ", |Delta(-1)| " + to_string(a));
        });
    }

    // Presentation invariance for the even family.
    for (const std::vector<long>& m : {std::vector<long>{1, 2, 2}, {1, 2, 4}, {3, 2, 2}, {1, 4, 4, 2}}) {
        const MontesinosLink k = even_family_member(m);
        const Pretzel p = montesinos_to_pretzel(m);
        const std::string name = print(k) + " vs " + print(LinkExpr(p));
        check.guarded(name, [&] {
            const PlanarDiagram dk = synthesize(k), dp = synthesize(p);
            check.expect(goeritz_det(dk) == goeritz_det(dp), name + ": determinants differ");
            check.expect(alexander(dk) == alexander(dp), name + ": Alexander polynomials differ");
        });
    }
    return report;
}

}  // namespace monty

#include "monty/pipeline.hpp"

#include <algorithm>
#include <functional>

namespace monty {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::lspace: return "LSPACE";
        case Verdict::not_lspace: return "NOT_LSPACE";
        case Verdict::not_applicable_link: return "NOT_APPLICABLE_LINK";
    }
    return "?";
}

std::string to_string(Stage s) {
    switch (s) {
        case Stage::components: return "components";
        case Stage::two_bridge: return "two-bridge";
        case Stage::family: return "family";
        case Stage::det_genus: return "det-genus";
        case Stage::alexander: return "alexander";
        case Stage::identification: return "identification";
    }
    return "?";
}

namespace {

long family_genus(const FamilyMembership& f) {
    if (const auto* o = std::get_if<OddTight>(&f.kind)) return genus_odd_family(o->d);
    return genus_even_family(std::get<EvenTight>(f.kind).m);
}

bool is_pretzel_lspace_form(const std::vector<long>& m) {
    return m.size() == 3 && m[0] == 1 && m[1] == 2 && m[2] % 2 == 0;
}

}  // namespace

ClassificationReport classify(const LinkExpr& expr) {
    ClassificationReport report;
    report.input = expr;
    auto record = [&](Stage s, bool passed, std::string detail) {
        report.basis.push_back({s, passed, std::move(detail)});
    };

    // (a) components
    const PlanarDiagram diagram = synthesize(expr);
    report.component_count = components(diagram);
    report.is_knot = report.component_count == 1;
    const MontesinosLink raw = to_montesinos(expr);
    report.det = determinant_formula(raw);
    if (!report.is_knot) {
        report.canonical = raw;
        record(Stage::components, false, std::to_string(report.component_count) + " components");
        report.verdict = Verdict::not_applicable_link;
        return report;
    }
    report.canonical = canonicalize(raw);
    record(Stage::components, true, "knot");

    // (b) two-bridge
    if (report.canonical.length() <= 2) {
        const TwoBridge b = two_bridge_reduce(report.canonical);
        report.two_bridge = b;
        report.family = recognize_family(report.canonical);
        const bool torus = std::holds_alternative<TwoBridgeTorus>(report.family->kind);
        const std::string name = "b(" + to_string(b.alpha) + "," + to_string(b.beta) + ")";
        record(Stage::two_bridge, torus, torus ? name + " = " + to_string(*report.family) : name + " is not T(2,N)");
        report.verdict = torus ? Verdict::lspace : Verdict::not_lspace;
        return report;
    }
    record(Stage::two_bridge, true, "length " + std::to_string(report.canonical.length()) + ", not two-bridge");

    // (c) family
    report.family = recognize_family(report.canonical);
    if (!report.family->in_family()) {
        record(Stage::family, false, to_string(*report.family));
        report.verdict = Verdict::not_lspace;
        return report;
    }
    record(Stage::family, true, to_string(*report.family));

    // (d) det <= 2g + 1
    report.genus = family_genus(*report.family);
    report.det_genus_pass = report.det <= 2 * *report.genus + 1;
    record(Stage::det_genus, *report.det_genus_pass,
           "det " + to_string(report.det) + (*report.det_genus_pass ? " <= " : " > ") + "2g+1 " +
               std::to_string(2 * *report.genus + 1));
    if (!*report.det_genus_pass) {
        report.verdict = Verdict::not_lspace;
        return report;
    }

    // (e) Alexander coefficient form, from the diagram
    report.alexander = alexander(diagram);
    report.alex_form_pass = lspace_coefficient_form(*report.alexander);
    record(Stage::alexander, *report.alex_form_pass, to_string(*report.alexander));
    if (!*report.alex_form_pass) {
        report.verdict = Verdict::not_lspace;
        return report;
    }

    // (f) identification
    const auto* even = std::get_if<EvenTight>(&report.family->kind);
    const bool identified = even && is_pretzel_lspace_form(even->m);
    if (identified) {
        record(Stage::identification, true, "P(-2,3," + std::to_string(even->m[2] + 1) + ")");
        report.verdict = Verdict::lspace;
    } else {
        record(Stage::identification, false, "not P(-2,3,2n+1)");
        report.verdict = Verdict::not_lspace;
    }
    return report;
}

namespace {

// Visits every nondecreasing extension of `prefix` with length in
// [min_len, max_len] (max_len 0: unlimited), new entries >= smallest and
// congruent to it mod step, and added sum <= remaining.
void nondecreasing(std::vector<long>& prefix, long smallest, long step, long remaining, std::size_t min_len,
                   std::size_t max_len, const std::function<void(const std::vector<long>&)>& visit) {
    if (prefix.size() >= min_len) visit(prefix);
    if (max_len != 0 && prefix.size() >= max_len) return;
    for (long x = smallest; x <= remaining; x += step) {
        prefix.push_back(x);
        nondecreasing(prefix, x, step, remaining - x, min_len, max_len, visit);
        prefix.pop_back();
    }
}

void survivor_alexander(EnumerationRow& row, const MontesinosLink& k) {
    if (!row.survived_cull) return;
    row.alexander = alexander(synthesize(k));
    row.alex_form_pass = lspace_coefficient_form(*row.alexander);
}

}  // namespace

std::vector<EnumerationRow> enumerate_odd(long bound) {
    if (bound < 4) throw DomainError("odd enumeration bound must be at least 4");
    std::vector<EnumerationRow> rows;
    std::vector<long> prefix;
    nondecreasing(prefix, 1, 1, bound, 3, 0, [&](const std::vector<long>& d) {
        long sum = 0;
        for (long x : d) sum += x;
        if (sum % 2 != 0) return;
        EnumerationRow row;
        row.params = d;
        const MontesinosLink k = odd_family_member(d);
        row.det = determinant_formula(k);
        row.two_g_plus_one = 2 * genus_odd_family(d) + 1;
        row.survived_cull = row.det <= row.two_g_plus_one;
        survivor_alexander(row, k);
        rows.push_back(std::move(row));
    });
    std::sort(rows.begin(), rows.end(), [](const EnumerationRow& a, const EnumerationRow& b) {
        if (a.params.size() != b.params.size()) return a.params.size() < b.params.size();
        return a.params < b.params;
    });
    return rows;
}

std::vector<EnumerationRow> enumerate_even(long bound, std::size_t min_r, std::size_t max_r) {
    if (bound < 5) throw DomainError("even enumeration bound must be at least 5");
    if (min_r < 3) min_r = 3;
    std::vector<EnumerationRow> rows;
    for (long m1 = 1; m1 <= bound; m1 += 2) {
        std::vector<long> rest;
        nondecreasing(rest, 2, 2, bound - m1, min_r - 1, max_r == 0 ? 0 : max_r - 1,
                      [&](const std::vector<long>& tail) {
                          std::vector<long> m{m1};
                          m.insert(m.end(), tail.begin(), tail.end());
                          EnumerationRow row;
                          row.params = m;
                          const MontesinosLink k = even_family_member(m);
                          row.det = determinant_formula(k);
                          row.two_g_plus_one = 2 * genus_even_family(m) + 1;
                          row.survived_cull = row.det <= row.two_g_plus_one;
                          survivor_alexander(row, k);
                          rows.push_back(std::move(row));
                      });
    }
    std::sort(rows.begin(), rows.end(), [](const EnumerationRow& a, const EnumerationRow& b) {
        if (a.params.size() != b.params.size()) return a.params.size() < b.params.size();
        return a.params < b.params;
    });
    return rows;
}

}  // namespace monty

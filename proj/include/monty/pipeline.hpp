#pragma once

#include "monty/diagram.hpp"
#include "monty/laurent.hpp"
#include "monty/montesinos.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monty {

enum class Verdict { lspace, not_lspace, not_applicable_link };

// Pipeline stages in evaluation order.
enum class Stage { components, two_bridge, family, det_genus, alexander, identification };

struct StageRecord {
    Stage stage;
    bool passed;
    std::string detail;
};

struct ClassificationReport {
    LinkExpr input;
    MontesinosLink canonical;  // as converted when the input is a link
    std::size_t component_count = 0;
    bool is_knot = false;
    std::optional<TwoBridge> two_bridge;
    std::optional<FamilyMembership> family;
    Integer det;
    std::optional<long> genus;
    std::optional<bool> det_genus_pass;
    std::optional<LaurentPoly> alexander;
    std::optional<bool> alex_form_pass;
    Verdict verdict = Verdict::not_lspace;
    std::vector<StageRecord> basis;  // stages evaluated, in order
};

std::string to_string(Verdict v);
std::string to_string(Stage s);

// Runs the stages in order and stops at the first that decides the
// verdict. Length <= 2 knots are decided by the two-bridge stage; longer
// knots go through family recognition, the det <= 2g+1 cull, the
// Alexander coefficient test and the final identification with
// P(-2,3,2c+1). Verdicts ignore chirality.
ClassificationReport classify(const LinkExpr& expr);

struct EnumerationRow {
    std::vector<long> params;
    Integer det;
    long two_g_plus_one = 0;
    bool survived_cull = false;
    std::optional<LaurentPoly> alexander;  // survivors only
    std::optional<bool> alex_form_pass;    // survivors only
};

// Nondecreasing d-tuples, r >= 3, sum d <= bound and even.
std::vector<EnumerationRow> enumerate_odd(long bound);

// m_1 odd, then nondecreasing even m_i; min_r <= r <= max_r (0 means no
// upper limit beyond the bound), sum m <= bound.
std::vector<EnumerationRow> enumerate_even(long bound, std::size_t min_r = 3, std::size_t max_r = 0);

enum class FaultInjection { none, drop_determinant_abs, drop_alternation_endpoint_rule };

struct SelftestReport {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Cross-oracle agreement and regression values. A fault can be injected
// to confirm that the checks notice it.
SelftestReport selftest(FaultInjection fault = FaultInjection::none);

}  // namespace monty

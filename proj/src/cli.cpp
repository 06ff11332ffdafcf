#include "monty/cli.hpp"

#include "monty/cf.hpp"
#include "monty/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace monty {

namespace {

struct CliConfig {
    std::string command;
    std::string cf_command;
    std::string expr;
    std::string file;
    std::string format = "text";
    long bound = 16;
    std::size_t r = 0;
    bool emit_diagram = false;
    bool show_stages = false;
    std::string fault = "none";

    bool records() const { return format == "records"; }
};

// Tab-separated key=value fields in insertion order.
class Record {
public:
    Record& add(const std::string& key, const std::string& value) {
        if (!text_.empty()) text_ += '\t';
        text_ += key + "=" + value;
        return *this;
    }
    const std::string& str() const { return text_; }

private:
    std::string text_;
};

std::string join(const std::vector<long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string yes_no(bool b) { return b ? "pass" : "fail"; }

std::string stage_trace(const ClassificationReport& report) {
    std::string s;
    for (std::size_t i = 0; i < report.basis.size(); ++i)
        s += (i ? "," : "") + to_string(report.basis[i].stage) + ":" + yes_no(report.basis[i].passed);
    return s;
}

long expression_genus(const LinkExpr& expr) {
    const MontesinosLink k = canonicalize(to_montesinos(expr));
    const FamilyMembership f = recognize_family(k);
    if (const auto* o = std::get_if<OddTight>(&f.kind)) return genus_odd_family(o->d);
    if (const auto* e = std::get_if<EvenTight>(&f.kind)) return genus_even_family(e->m);
    if (const auto* t = std::get_if<TwoBridgeTorus>(&f.kind)) return t->n;
    throw DomainError("genus is only computed for tight fibered family members; " + print(expr) + " is " +
                      to_string(f));
}

void emit_classification(const ClassificationReport& report, const CliConfig& cfg, std::ostream& out) {
    const std::string family = report.family ? to_string(*report.family) : "-";
    const std::string genus = report.genus ? std::to_string(*report.genus) : "-";
    const std::string det_genus = report.det_genus_pass ? yes_no(*report.det_genus_pass) : "-";
    const std::string alex = report.alexander ? to_string(*report.alexander) : "-";
    const std::string alex_form = report.alex_form_pass ? yes_no(*report.alex_form_pass) : "-";
    if (cfg.records()) {
        out << Record()
                   .add("expr", print(report.input))
                   .add("canonical", print(report.canonical))
                   .add("components", std::to_string(report.component_count))
                   .add("det", to_string(report.det))
                   .add("family", family)
                   .add("genus", genus)
                   .add("det_genus", det_genus)
                   .add("alexander", alex)
                   .add("alex_form", alex_form)
                   .add("verdict", to_string(report.verdict))
                   .add("stages", stage_trace(report))
                   .str()
            << '\n';
        return;
    }
    out << "input: " << print(report.input) << '\n'
        << "canonical: " << print(report.canonical) << '\n'
        << "components: " << report.component_count << '\n'
        << "det: " << report.det << '\n'
        << "family: " << family << '\n'
        << "genus: " << genus << '\n'
        << "alexander: " << alex << '\n'
        << "verdict: " << to_string(report.verdict) << '\n';
    if (cfg.show_stages)
        for (const auto& s : report.basis)
            out << "stage " << to_string(s.stage) << ": " << yes_no(s.passed) << " (" << s.detail << ")\n";
}

// Handles one expression for the per-expression subcommands.
void handle_expression(const std::string& text, const CliConfig& cfg, bool corpus, std::ostream& out) {
    const LinkExpr expr = parse(text);
    const std::string& cmd = cfg.command;
    auto single = [&](const std::string& key, const std::string& value) {
        if (cfg.records())
            out << Record().add("expr", print(expr)).add(key, value).str() << '\n';
        else if (corpus)
            out << print(expr) << ": " << value << '\n';
        else
            out << value << '\n';
    };

    if (cmd == "parse") {
        const char* kind = std::holds_alternative<MontesinosLink>(expr) ? "montesinos"
                           : std::holds_alternative<Pretzel>(expr)      ? "pretzel"
                                                                        : "two-bridge";
        if (cfg.records())
            out << Record().add("expr", print(expr)).add("kind", kind).str() << '\n';
        else
            out << print(expr) << '\n';
    } else if (cmd == "canon") {
        const MontesinosLink k = canonicalize(to_montesinos(expr));
        const std::string type = to_string(montesinos_type(k));
        if (cfg.records())
            out << Record().add("expr", print(expr)).add("canonical", print(k)).add("type", type).str() << '\n';
        else
            out << (corpus ? print(expr) + ": " : "") << print(k) << " (" << type << " type)\n";
    } else if (cmd == "det") {
        single("det", to_string(determinant_formula(to_montesinos(expr))));
    } else if (cmd == "components") {
        single("components", std::to_string(components(synthesize(expr))));
    } else if (cmd == "alex") {
        single("alexander", to_string(alexander(synthesize(expr))));
    } else if (cmd == "genus") {
        single("genus", std::to_string(expression_genus(expr)));
    } else if (cmd == "classify") {
        emit_classification(classify(expr), cfg, out);
        if (corpus && !cfg.records()) out << '\n';
    }
    if (cfg.emit_diagram) out << export_diagram(synthesize(expr));
}

void emit_rows(const std::vector<EnumerationRow>& rows, const CliConfig& cfg, std::ostream& out) {
    if (!cfg.records())
        out << std::left << std::setw(20) << "params" << std::setw(8) << "det" << std::setw(8) << "2g+1"
            << std::setw(10) << "survived" << "alexander\n";
    for (const auto& row : rows) {
        if (cfg.r != 0 && row.params.size() != cfg.r) continue;
        const std::string alex = row.alexander ? to_string(*row.alexander) : "-";
        const std::string form = row.alex_form_pass ? yes_no(*row.alex_form_pass) : "-";
        if (cfg.records()) {
            out << Record()
                       .add("r", std::to_string(row.params.size()))
                       .add("params", join(row.params))
                       .add("det", to_string(row.det))
                       .add("2g+1", std::to_string(row.two_g_plus_one))
                       .add("survived", row.survived_cull ? "yes" : "no")
                       .add("alex_form", form)
                       .add("alexander", alex)
                       .str()
                << '\n';
        } else {
            out << std::left << std::setw(20) << "(" + join(row.params) + ")" << std::setw(8) << to_string(row.det)
                << std::setw(8) << row.two_g_plus_one << std::setw(10) << (row.survived_cull ? "yes" : "no")
                << (row.alexander ? alex + " [" + form + "]" : "-") << '\n';
        }
    }
}

Rational parse_slope(const std::string& text) {
    const auto slash = text.find('/');
    try {
        const Integer num(text.substr(0, slash));
        const Integer den(slash == std::string::npos ? std::string("1") : text.substr(slash + 1));
        if (den == 0) throw DomainError("zero denominator in " + text);
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("expected a fraction p/q, got '" + text + "'", 0);
    }
}

int run_cf(const CliConfig& cfg, std::ostream& out) {
    std::string value, expansion;
    if (cfg.cf_command == "eval") {
        const ContinuedFraction cf = parse_continued_fraction(cfg.expr);
        expansion = to_string(cf);
        value = to_string(eval(cf));
        if (cfg.records())
            out << Record().add("cf", expansion).add("value", value).str() << '\n';
        else
            out << value << '\n';
        return kExitOk;
    }
    const Rational slope = parse_slope(cfg.expr);
    const ContinuedFraction cf = cfg.cf_command == "even" ? even_expansion(slope) : strict_expansion(slope);
    if (cfg.records())
        out << Record().add("slope", to_string(slope)).add("cf", to_string(cf)).str() << '\n';
    else
        out << to_string(cf) << '\n';
    return kExitOk;
}

int run_selftest(const CliConfig& cfg, std::ostream& out) {
    FaultInjection fault = FaultInjection::none;
    if (cfg.fault == "drop-abs") fault = FaultInjection::drop_determinant_abs;
    if (cfg.fault == "drop-endpoint") fault = FaultInjection::drop_alternation_endpoint_rule;
    const SelftestReport report = selftest(fault);
    if (cfg.records()) {
        out << Record()
                   .add("checks", std::to_string(report.checks))
                   .add("failures", std::to_string(report.failures.size()))
                   .str()
            << '\n';
        for (const auto& f : report.failures) out << Record().add("failure", f).str() << '\n';
    } else {
        out << "checks: " << report.checks << "\nfailures: " << report.failures.size() << '\n';
        for (const auto& f : report.failures) out << "  " << f << '\n';
    }
    return report.ok() ? kExitOk : kExitDomainError;
}

const char* const kExpressionCommands[][2] = {
    {"parse", "Parse and print an expression in canonical notation"},
    {"canon", "Cyclically normalize a Montesinos knot and report its type"},
    {"det", "Determinant from the closed formula"},
    {"components", "Number of link components of the standard diagram"},
    {"alex", "Alexander polynomial of the standard diagram (knots only)"},
    {"genus", "Genus of a tight fibered family member or T(2,N)"},
    {"classify", "Run the L-space obstruction pipeline"},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Montesinos knot classification toolkit", "monty"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"text", "records"};

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
    };
    for (const auto& [name, help] : kExpressionCommands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("expr", cfg.expr, "Expression such as M(3/4,-2/5,1/3|3), P(-2,3,7) or B(5/3)");
        sub->add_option("--file", cfg.file, "Corpus file, one expression per line, # comments");
        add_format(sub);
        sub->add_flag("--emit-diagram", cfg.emit_diagram, "Also print the crossing list of the diagram");
        if (std::string(name) == "classify")
            sub->add_flag("--show-stages", cfg.show_stages, "Print every pipeline stage");
    }
    for (const auto& [name, help] :
         {std::pair{"enumerate-odd", "Enumerate the odd tight fibered family with the det-genus cull"},
          std::pair{"enumerate-even", "Enumerate the even tight fibered family with the det-genus cull"}}) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--bound", cfg.bound, "Bound on the parameter sum")->check(CLI::Range(4L, 1000L));
        sub->add_option("--r", cfg.r, "Only tuples of this length");
        add_format(sub);
    }
    CLI::App* cf = app.add_subcommand("cf", "Continued fractions [x1,...,xm] = 1/(x1 - 1/(x2 - ...))");
    cf->require_subcommand(1);
    for (const auto& [name, help] : {std::pair{"eval", "Evaluate a coefficient list"},
                                     std::pair{"even", "All-even expansion of a slope"},
                                     std::pair{"strict", "Strict expansion of a slope"}}) {
        CLI::App* sub = cf->add_subcommand(name, help);
        sub->add_option("value", cfg.expr, "Coefficient list or slope")->required();
        add_format(sub);
    }
    CLI::App* self = app.add_subcommand("selftest", "Run cross-oracle agreement checks");
    self->add_option("--fault", cfg.fault, "Inject a fault")
        ->check(CLI::IsMember({"none", "drop-abs", "drop-endpoint"}));
    add_format(self);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    try {
        if (cfg.command == "cf") {
            cfg.cf_command = chosen->get_subcommands().front()->get_name();
            return run_cf(cfg, out);
        }
        if (cfg.command == "selftest") return run_selftest(cfg, out);
        if (cfg.command == "enumerate-odd" || cfg.command == "enumerate-even") {
            const auto rows = cfg.command == "enumerate-odd" ? enumerate_odd(cfg.bound)
                                                             : enumerate_even(cfg.bound, cfg.r ? cfg.r : 3, cfg.r);
            emit_rows(rows, cfg, out);
            return kExitOk;
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }

    // Expression commands: exactly one input source.
    if (cfg.expr.empty() == cfg.file.empty()) {
        err << "usage error: give either an expression or --file\n" << chosen->help();
        return kExitUsage;
    }
    if (cfg.file.empty()) {
        try {
            handle_expression(cfg.expr, cfg, false, out);
            return kExitOk;
        } catch (const DomainError& e) {
            err << "error: " << e.what() << '\n';
            return kExitDomainError;
        }
    }

    std::ifstream in(cfg.file);
    if (!in) {
        err << "error: cannot read " << cfg.file << '\n';
        return kExitDomainError;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::size_t processed = 0, failed = 0;
    for (const auto& line : corpus_lines(buffer.str())) {
        ++processed;
        try {
            handle_expression(line, cfg, true, out);
        } catch (const DomainError& e) {
            ++failed;
            err << "error: " << line << ": " << e.what() << '\n';
        }
    }
    err << processed << " expressions, " << failed << " errors\n";
    return failed == 0 ? kExitOk : kExitDomainError;
}

}  // namespace monty

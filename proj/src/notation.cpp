#include "monty/notation.hpp"

#include <cctype>
#include <sstream>

namespace monty {

bool Slope::is_normal() const {
    return alpha > 1 && abs(beta) < alpha && gcd(alpha, beta) == 1;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    LinkExpr parse_expr() {
        skip_ws();
        const std::size_t head = pos_;
        if (at_end()) fail("empty expression");
        const char kind = text_[pos_++];
        LinkExpr result;
        switch (kind) {
            case 'M': result = parse_montesinos(); break;
            case 'P': result = parse_pretzel(); break;
            case 'B': result = parse_two_bridge(); break;
            default: fail("expected 'M', 'P' or 'B'", head);
        }
        skip_ws();
        if (!at_end()) fail("trailing characters");
        return result;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }
    [[noreturn]] void fail(const std::string& message, std::size_t at) const {
        throw ParseError(message, at);
    }

    bool at_end() const { return pos_ >= text_.size(); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return !at_end() && text_[pos_] == c;
    }

    void expect(char c) {
        skip_ws();
        if (at_end() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Integer parse_integer() {
        skip_ws();
        const std::size_t start = pos_;
        std::string digits;
        if (!at_end() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            if (text_[pos_] == '-') digits.push_back('-');
            ++pos_;
            skip_ws();
        }
        const std::size_t first_digit = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits.push_back(text_[pos_++]);
        if (pos_ == first_digit) fail("expected integer", start);
        return Integer(digits);
    }

    // Reads `p` or `p/q`; returns (numerator, denominator) as written.
    std::pair<Integer, Integer> parse_fraction(std::size_t& start) {
        skip_ws();
        start = pos_;
        Integer num = parse_integer();
        Integer den = 1;
        if (peek('/')) {
            ++pos_;
            den = parse_integer();
        }
        return {num, den};
    }

    MontesinosLink parse_montesinos() {
        expect('(');
        MontesinosLink link;
        Integer carried = 0;
        if (!peek('|')) {
            while (true) {
                std::size_t start = 0;
                auto [beta, alpha] = parse_fraction(start);
                if (alpha == 0) fail("zero denominator", start);
                if (alpha < 0) {
                    beta = -beta;
                    alpha = -alpha;
                }
                if (alpha == 1) {
                    carried += beta;
                } else {
                    if (gcd(alpha, beta) != 1)
                        fail("slope " + to_string(beta) + "/" + to_string(alpha) +
                                 " is not in lowest terms",
                             start);
                    const Integer whole = trunc_div(beta, alpha);
                    carried += whole;
                    link.slopes.push_back({beta - whole * alpha, alpha});
                }
                if (peek(',')) {
                    ++pos_;
                    continue;
                }
                break;
            }
        }
        expect('|');
        link.e = parse_integer() + carried;
        expect(')');
        return link;
    }

    Pretzel parse_pretzel() {
        expect('(');
        Pretzel p;
        while (true) {
            skip_ws();
            const std::size_t start = pos_;
            Integer q = parse_integer();
            if (q == 0) fail("zero pretzel parameter", start);
            p.twists.push_back(q);
            if (peek(',')) {
                ++pos_;
                continue;
            }
            break;
        }
        expect(')');
        return p;
    }

    TwoBridge parse_two_bridge() {
        expect('(');
        std::size_t start = 0;
        auto [alpha, beta] = parse_fraction(start);
        expect(')');
        if (alpha < 0) {
            alpha = -alpha;
            beta = -beta;
        }
        if (beta == 0 || abs(beta) >= alpha)
            fail("two-bridge pair needs 0 < |beta| < alpha", start);
        if (gcd(alpha, beta) != 1) fail("two-bridge pair is not coprime", start);
        return {alpha, beta};
    }
};

}  // namespace

LinkExpr parse(std::string_view text) { return Parser(text).parse_expr(); }

std::string print(const MontesinosLink& link) {
    std::ostringstream out;
    out << "M(";
    for (std::size_t i = 0; i < link.slopes.size(); ++i) {
        if (i) out << ',';
        out << link.slopes[i].beta << '/' << link.slopes[i].alpha;
    }
    out << '|' << link.e << ')';
    return out.str();
}

std::string print(const LinkExpr& expr) {
    struct Printer {
        std::string operator()(const MontesinosLink& m) const { return print(m); }
        std::string operator()(const Pretzel& p) const {
            std::ostringstream out;
            out << "P(";
            for (std::size_t i = 0; i < p.twists.size(); ++i) {
                if (i) out << ',';
                out << p.twists[i];
            }
            out << ')';
            return out.str();
        }
        std::string operator()(const TwoBridge& b) const {
            return "B(" + to_string(b.alpha) + "/" + to_string(b.beta) + ")";
        }
    };
    return std::visit(Printer{}, expr);
}

std::vector<std::string> corpus_lines(std::string_view contents) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= contents.size()) {
        std::size_t end = contents.find('\n', start);
        if (end == std::string_view::npos) end = contents.size();
        std::string_view line = contents.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())))
            line.remove_prefix(1);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.remove_suffix(1);
        if (!line.empty()) lines.emplace_back(line);
        start = end + 1;
    }
    return lines;
}

}  // namespace monty

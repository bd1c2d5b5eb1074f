#include "alpfeas/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace alpfeas {

std::string SourceSpan::str() const {
    std::ostringstream os;
    os << "line " << line << ", col " << col_begin;
    return os.str();
}

ParseError::ParseError(SourceSpan span, const std::string& message)
    : std::runtime_error(span.str() + ": " + message), span_(span) {}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Rel, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;   // literal for Number/Ident, operator text for Rel
    SourceSpan span;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Tokenizes one logical line (comments already stripped).
std::vector<Token> lex_line(const std::string& s, int lineno) {
    std::vector<Token> out;
    size_t i = 0;
    auto span_at = [&](size_t b, size_t e) {
        return SourceSpan{lineno, static_cast<int>(b) + 1, static_cast<int>(e) + 1};
    };
    while (i < s.size()) {
        const char c = s[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        const size_t b = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i < s.size() && s[i] == '/' && i + 1 < s.size() &&
                std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
                ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            }
            out.push_back({Tok::Number, s.substr(b, i - b), span_at(b, i)});
            continue;
        }
        if (ident_start(c)) {
            while (i < s.size() && ident_char(s[i])) ++i;
            out.push_back({Tok::Ident, s.substr(b, i - b), span_at(b, i)});
            continue;
        }
        switch (c) {
        case '+': out.push_back({Tok::Plus, "+", span_at(b, b + 1)}); ++i; continue;
        case '-': out.push_back({Tok::Minus, "-", span_at(b, b + 1)}); ++i; continue;
        case '*': out.push_back({Tok::Star, "*", span_at(b, b + 1)}); ++i; continue;
        case '<':
            if (i + 1 < s.size() && s[i + 1] == '=') {
                out.push_back({Tok::Rel, "<=", span_at(b, b + 2)});
                i += 2;
            } else {
                out.push_back({Tok::Rel, "<", span_at(b, b + 1)});
                ++i;
            }
            continue;
        case '>':
            if (i + 1 < s.size() && s[i + 1] == '=') {
                out.push_back({Tok::Rel, ">=", span_at(b, b + 2)});
                i += 2;
            } else {
                out.push_back({Tok::Rel, ">", span_at(b, b + 1)});
                ++i;
            }
            continue;
        case '=': out.push_back({Tok::Rel, "=", span_at(b, b + 1)}); ++i; continue;
        case '!':
            if (i + 1 < s.size() && s[i + 1] == '=') {
                out.push_back({Tok::Rel, "!=", span_at(b, b + 2)});
                i += 2;
                continue;
            }
            throw ParseError(span_at(b, b + 1), "stray '!'");
        default: break;
        }
        // unicode aliases for the relational symbols
        const std::string rest = s.substr(i);
        auto starts = [&](const char* u) { return rest.rfind(u, 0) == 0; };
        if (starts("≤")) { out.push_back({Tok::Rel, "<=", span_at(b, b + 3)}); i += 3; continue; }
        if (starts("≥")) { out.push_back({Tok::Rel, ">=", span_at(b, b + 3)}); i += 3; continue; }
        if (starts("≠")) { out.push_back({Tok::Rel, "!=", span_at(b, b + 3)}); i += 3; continue; }
        throw ParseError(span_at(b, b + 1), "unexpected character '" + std::string(1, c) + "'");
    }
    return out;
}

struct Side {
    std::map<std::string, Rational> coeffs;
    Rational constant;
};

/// Parses a signed sum of terms from tokens[pos..], stopping at a Rel or end.
Side parse_side(const std::vector<Token>& toks, size_t& pos, int lineno) {
    Side side;
    bool expect_term = true;
    int sign = 1;
    auto here = [&]() {
        return pos < toks.size() ? toks[pos].span : SourceSpan{lineno, 1, 1};
    };
    if (pos < toks.size() && (toks[pos].kind == Tok::Plus || toks[pos].kind == Tok::Minus)) {
        sign = toks[pos].kind == Tok::Minus ? -1 : 1;
        ++pos;
    }
    while (true) {
        if (pos >= toks.size() || toks[pos].kind == Tok::Rel) {
            if (expect_term) throw ParseError(here(), "expected a term");
            break;
        }
        const Token& t = toks[pos];
        if (!expect_term) {
            if (t.kind == Tok::Plus || t.kind == Tok::Minus) {
                sign = t.kind == Tok::Minus ? -1 : 1;
                ++pos;
                expect_term = true;
                continue;
            }
            throw ParseError(t.span, "expected '+', '-' or a relational operator");
        }
        // one term
        Rational coeff(sign);
        std::optional<std::string> var;
        if (t.kind == Tok::Number) {
            coeff *= Rational::from_string(t.text);
            ++pos;
            if (pos < toks.size() && toks[pos].kind == Tok::Star) {
                ++pos;
                if (pos >= toks.size() || toks[pos].kind != Tok::Ident)
                    throw ParseError(here(), "expected a variable after '*'");
                var = toks[pos].text;
                ++pos;
            } else if (pos < toks.size() && toks[pos].kind == Tok::Ident) {
                var = toks[pos].text;
                ++pos;
            }
        } else if (t.kind == Tok::Ident) {
            var = t.text;
            ++pos;
        } else {
            throw ParseError(t.span, "expected a term");
        }
        // nonlinear terms like "x*y" are rejected
        if (var && pos < toks.size() &&
            (toks[pos].kind == Tok::Ident ||
             (toks[pos].kind == Tok::Star))) {
            throw ParseError(toks[pos].span, "nonlinear term: at most one variable per term");
        }
        if (var) {
            side.coeffs[*var] += coeff;
        } else {
            side.constant += coeff;
        }
        expect_term = false;
    }
    return side;
}

std::string strip_comment(const std::string& line) {
    const size_t pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

} // namespace

LinearSystem parse_system(const std::string& text) {
    LinearSystem sys;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_constraint = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::vector<Token> toks = lex_line(strip_comment(line), lineno);
        if (toks.empty()) continue;
        if (toks[0].kind == Tok::Ident && toks[0].text == "vars") {
            if (sys.declared_variables || saw_constraint)
                throw ParseError(toks[0].span, "'vars' must be the first significant line");
            for (size_t i = 1; i < toks.size(); ++i) {
                if (toks[i].kind != Tok::Ident)
                    throw ParseError(toks[i].span, "expected a variable name");
                sys.variables.push_back(toks[i].text);
            }
            if (sys.variables.empty())
                throw ParseError(toks[0].span, "'vars' line declares no variables");
            sys.declared_variables = true;
            continue;
        }
        size_t pos = 0;
        const Side lhs = parse_side(toks, pos, lineno);
        if (pos >= toks.size() || toks[pos].kind != Tok::Rel)
            throw ParseError(pos < toks.size() ? toks[pos].span : SourceSpan{lineno, 1, 1},
                             "expected a relational operator");
        const std::string rel = toks[pos].text;
        ++pos;
        const Side rhs = parse_side(toks, pos, lineno);
        if (pos != toks.size())
            throw ParseError(toks[pos].span, "trailing tokens after constraint");

        Relop op;
        bool flip = false;
        if (rel == "<=") op = Relop::LE;
        else if (rel == "<") op = Relop::LT;
        else if (rel == "=") op = Relop::EQ;
        else if (rel == "!=") op = Relop::NE;
        else if (rel == ">=") { op = Relop::LE; flip = true; }
        else { op = Relop::LT; flip = true; } // ">"

        sys.constraints.push_back(
            normalize(lhs.coeffs, lhs.constant, op, flip, rhs.coeffs, rhs.constant));
        saw_constraint = true;
    }
    try {
        return validate(std::move(sys));
    } catch (const ValidationError& e) {
        throw ParseError(SourceSpan{lineno, 1, 1}, e.what());
    }
}

namespace {

void render_rational_coeff(std::ostream& os, const Rational& mag, const std::string& var) {
    if (mag == Rational(1)) {
        os << var;
    } else {
        os << mag.str() << " " << var;
    }
}

} // namespace

std::string render_system(const LinearSystem& system) {
    if (system.is_parametric())
        throw std::invalid_argument("render_system: parametric coefficients are not part of the text format");
    std::ostringstream os;
    os << "# linear system: " << system.variables.size() << " vars, "
       << system.constraints.size() << " constraints\n";
    if (!system.variables.empty()) {
        os << "vars";
        for (const auto& v : system.variables) os << " " << v;
        os << "\n";
    }
    for (const auto& c : system.constraints) {
        bool first = true;
        for (const auto& v : system.variables) {
            auto it = c.coeffs.find(v);
            if (it == c.coeffs.end()) continue;
            const Rational coeff = it->second.constant();
            if (coeff.is_zero()) continue;
            if (first) {
                if (coeff.sign() < 0) os << "-";
            } else {
                os << (coeff.sign() < 0 ? " - " : " + ");
            }
            render_rational_coeff(os, coeff.abs(), v);
            first = false;
        }
        if (first) os << "0";
        os << " " << relop_text(c.relop) << " " << c.rhs.str() << "\n";
    }
    return os.str();
}

namespace {

/// Renders "coeff var" for a polynomial coefficient: "x1", "3 x1",
/// "K ~e", "2*K ~y1", "(K+2) ~y2".
void render_poly_coeff(std::ostream& os, const KPoly& mag, const std::string& var) {
    if (mag == KPoly(Rational(1))) {
        os << var;
        return;
    }
    const bool single_term = [&] {
        int nonzero = 0;
        for (int d = 0; d <= mag.degree(); ++d)
            if (!mag.coeff(d).is_zero()) ++nonzero;
        return nonzero <= 1;
    }();
    if (single_term) {
        os << mag.str() << " " << var;
    } else {
        os << "(" << mag.str() << ") " << var;
    }
}

} // namespace

std::string render_alp(const AlpProblem& alp) {
    std::ostringstream os;
    os << "# alp case " << alp.case_desc.str() << "\n";
    os << "# vars";
    for (const auto& v : alp.variables) os << " " << v;
    os << "\n";
    for (const auto& row : alp.rows) {
        // everything on the left of "<= 0"
        const KPoly moved = -row.rhs;
        struct Item {
            int sign;
            std::string text;
        };
        std::vector<Item> items;
        auto push_poly_term = [&](const KPoly& p, const std::string& var) {
            const int s = p.leading().sign();
            const KPoly mag = s < 0 ? -p : p;
            std::ostringstream t;
            render_poly_coeff(t, mag, var);
            items.push_back({s, t.str()});
        };
        std::optional<Item> constant;
        if (!moved.is_zero()) {
            const int s = moved.leading().sign();
            const KPoly mag = s < 0 ? -moved : moved;
            const std::string text =
                mag.is_constant() ? mag.str() : "(" + mag.str() + ")";
            constant = Item{s, text};
        }
        if (constant && constant->sign > 0) items.push_back(*constant);
        for (const auto& v : alp.variables) {
            auto it = row.coeffs.find(v);
            if (it == row.coeffs.end() || it->second.is_zero()) continue;
            push_poly_term(it->second, v);
        }
        if (constant && constant->sign < 0) items.push_back(*constant);
        if (items.empty()) {
            os << "0 <= 0\n";
            continue;
        }
        for (size_t i = 0; i < items.size(); ++i) {
            if (i == 0) {
                if (items[i].sign < 0) os << "-";
            } else {
                os << (items[i].sign < 0 ? " - " : " + ");
            }
            os << items[i].text;
        }
        os << " <= 0\n";
    }
    return os.str();
}

} // namespace alpfeas

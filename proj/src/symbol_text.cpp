#include "cylwig/symbol_text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

namespace cylwig {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(pos, std::string("expected '") + c + "'");
    }
    bool accept_word(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }
};

double parse_float(Cursor& c) {
    c.skip_ws();
    const char* begin = c.text.data() + c.pos;
    const char* end = c.text.data() + c.text.size();
    double value = 0.0;
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{}) throw ParseError(c.pos, "expected a number");
    c.pos += res.ptr - begin;
    return value;
}

int parse_int(Cursor& c) {
    c.skip_ws();
    const char* begin = c.text.data() + c.pos;
    const char* end = c.text.data() + c.text.size();
    int value = 0;
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{}) throw ParseError(c.pos, "expected an integer");
    c.pos += res.ptr - begin;
    return value;
}

bool starts_number(char ch) { return std::isdigit(static_cast<unsigned char>(ch)) || ch == '.'; }

SymbolTerm parse_term(Cursor& c, double sign) {
    SymbolTerm term;
    term.coefficient = sign;
    bool consumed = false;

    // coefficient: float or '(' float ',' float ')'
    if (c.peek() == '(') {
        c.expect('(');
        const double re = parse_float(c);
        c.expect(',');
        const double im = parse_float(c);
        c.expect(')');
        term.coefficient *= cd{re, im};
        consumed = true;
        c.accept('*');
    } else if (starts_number(c.peek()) || ((c.peek() == '-' || c.peek() == '+') )) {
        term.coefficient *= parse_float(c);
        consumed = true;
        c.accept('*');
    }

    if (c.accept('p')) {
        consumed = true;
        term.p_power = 1;
        if (c.accept('^')) {
            term.p_power = parse_int(c);
            if (term.p_power < 0) throw ParseError(c.pos, "p power must be >= 0");
        }
        c.accept('*');
    }

    const std::size_t trig_pos = c.pos;
    Trig trig = Trig::None;
    if (c.accept_word("cos"))
        trig = Trig::Cos;
    else if (c.accept_word("sin"))
        trig = Trig::Sin;
    if (trig != Trig::None) {
        term.trig = trig;
        consumed = true;
        c.expect('(');
        term.mode = 1;
        if (c.peek() != 't') term.mode = parse_int(c);
        if (!c.accept('t')) throw ParseError(c.pos, "expected 't'");
        c.expect(')');
        if (term.mode < 0) throw ParseError(trig_pos, "mode must be >= 0");
        if (term.mode == 0) {
            if (term.trig == Trig::Sin) throw ParseError(trig_pos, "sin(0t) is identically zero");
            term.trig = Trig::None;  // cos(0t) = 1
        }
    }

    if (!consumed) throw ParseError(c.pos, "empty term");
    if (term.trig == Trig::None) term.mode = 0;
    return term;
}

int trig_rank(Trig t) { return t == Trig::None ? 0 : (t == Trig::Cos ? 1 : 2); }

void normalize(SymbolExpression& expr) {
    std::sort(expr.terms.begin(), expr.terms.end(), [](const SymbolTerm& a, const SymbolTerm& b) {
        if (a.p_power != b.p_power) return a.p_power > b.p_power;
        if (trig_rank(a.trig) != trig_rank(b.trig)) return trig_rank(a.trig) < trig_rank(b.trig);
        return a.mode < b.mode;
    });
    std::vector<SymbolTerm> merged;
    for (const auto& t : expr.terms) {
        if (!merged.empty() && merged.back().p_power == t.p_power && merged.back().trig == t.trig &&
            merged.back().mode == t.mode)
            merged.back().coefficient += t.coefficient;
        else
            merged.push_back(t);
    }
    expr.terms.clear();
    for (const auto& t : merged)
        if (t.coefficient != cd{0.0, 0.0}) expr.terms.push_back(t);
}

std::string shortest(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

SymbolExpression parse_symbol(std::string_view text) {
    Cursor c{text};
    SymbolExpression expr;
    if (c.done()) throw ParseError(0, "empty expression");

    double sign = 1.0;
    if (c.accept('-')) sign = -1.0;
    else c.accept('+');
    expr.terms.push_back(parse_term(c, sign));

    while (!c.done()) {
        if (c.accept('+'))
            sign = 1.0;
        else if (c.accept('-'))
            sign = -1.0;
        else
            throw ParseError(c.pos, "expected '+' or '-'");
        expr.terms.push_back(parse_term(c, sign));
    }
    normalize(expr);
    return expr;
}

std::string print_symbol(const SymbolExpression& expr) {
    if (expr.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : expr.terms) {
        const bool has_factors = t.p_power > 0 || t.trig != Trig::None;
        std::string joiner, coef_str;
        if (t.coefficient.imag() != 0.0) {
            joiner = first ? "" : " + ";
            coef_str = "(" + shortest(t.coefficient.real()) + "," + shortest(t.coefficient.imag()) + ")";
        } else {
            const double re = t.coefficient.real();
            const bool neg = re < 0.0;
            joiner = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            const double mag = std::abs(re);
            if (mag != 1.0 || !has_factors) coef_str = shortest(mag);
        }
        std::vector<std::string> pieces;
        if (!coef_str.empty()) pieces.push_back(coef_str);
        if (t.p_power > 0) pieces.push_back(t.p_power == 1 ? "p" : "p^" + std::to_string(t.p_power));
        if (t.trig != Trig::None) {
            std::string trig = t.trig == Trig::Cos ? "cos(" : "sin(";
            if (t.mode != 1) trig += std::to_string(t.mode);
            pieces.push_back(trig + "t)");
        }
        std::string body;
        for (std::size_t i = 0; i < pieces.size(); ++i) body += (i ? "*" : "") + pieces[i];
        out += joiner + body;
        first = false;
    }
    return out;
}

PhaseSpaceSymbol to_phase_space_symbol(const SymbolExpression& expr) {
    PhaseSpaceSymbol s;
    for (const auto& t : expr.terms) {
        switch (t.trig) {
            case Trig::None: s = s + PhaseSpaceSymbol::p_power(t.p_power, t.coefficient); break;
            case Trig::Cos: s = s + PhaseSpaceSymbol::cos_term(t.mode, t.p_power, t.coefficient); break;
            case Trig::Sin: s = s + PhaseSpaceSymbol::sin_term(t.mode, t.p_power, t.coefficient); break;
        }
    }
    return s;
}

SymbolExpression from_phase_space_symbol(const PhaseSpaceSymbol& symbol, double drop_tol) {
    SymbolExpression expr;
    for (const auto& [k, poly] : symbol.terms()) {
        if (k < 0) continue;  // handled with the +k partner
        const Polynomial partner = symbol.term(-k);
        for (int j = 0; j <= std::max(poly.degree(), partner.degree()); ++j) {
            if (k == 0) {
                const cd c = poly.coeff(j);
                if (std::abs(c) > drop_tol) expr.terms.push_back({c, j, Trig::None, 0});
            } else {
                const cd alpha = poly.coeff(j);
                const cd beta = partner.coeff(j);
                const cd cos_c = alpha + beta;
                const cd sin_c = cd{0.0, 1.0} * (alpha - beta);
                if (std::abs(cos_c) > drop_tol) expr.terms.push_back({cos_c, j, Trig::Cos, k});
                if (std::abs(sin_c) > drop_tol) expr.terms.push_back({sin_c, j, Trig::Sin, k});
            }
        }
    }
    SymbolExpression out = expr;
    std::sort(out.terms.begin(), out.terms.end(), [](const SymbolTerm& a, const SymbolTerm& b) {
        if (a.p_power != b.p_power) return a.p_power > b.p_power;
        if (trig_rank(a.trig) != trig_rank(b.trig)) return trig_rank(a.trig) < trig_rank(b.trig);
        return a.mode < b.mode;
    });
    return out;
}

}  // namespace cylwig

#include "szego/symbol_expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>

namespace szego::cli {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos);
    }
};

double parse_number(Cursor& cur) {
    cur.skip_ws();
    const std::size_t start = cur.pos;
    std::size_t p = cur.pos;
    const std::string& s = cur.s;
    while (p < s.size() && (std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == '.')) ++p;
    if (p < s.size() && (s[p] == 'e' || s[p] == 'E')) {
        std::size_t q = p + 1;
        if (q < s.size() && (s[q] == '+' || s[q] == '-')) ++q;
        if (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) {
            ++q;
            while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
            p = q;
        }
    }
    if (p == start) throw ParseError("expected a number", start);
    try {
        std::size_t used = 0;
        const double v = std::stod(s.substr(start, p - start), &used);
        if (used != p - start) throw ParseError("malformed number", start);
        cur.pos = p;
        return v;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed number", start);
    } catch (const std::out_of_range&) {
        throw ParseError("number out of range", start);
    }
}

std::string parse_ident(Cursor& cur) {
    cur.skip_ws();
    std::size_t p = cur.pos;
    const std::string& s = cur.s;
    while (p < s.size() && std::isalpha(static_cast<unsigned char>(s[p]))) ++p;
    std::string ident = s.substr(cur.pos, p - cur.pos);
    cur.pos = p;
    return ident;
}

// cos / sin with an integer frequency: "cos(x)" or "cos(3*x)".
int parse_trig_arg(Cursor& cur) {
    cur.expect('(', "after function name");
    int k = 1;
    if (cur.peek() != 'x') {
        const std::size_t at = cur.pos;
        const double kd = parse_number(cur);
        k = static_cast<int>(kd);
        if (static_cast<double>(k) != kd || k < 1)
            throw ParseError("frequency must be an integer >= 1", at);
        cur.expect('*', "between frequency and x");
    }
    cur.skip_ws();
    const std::size_t at = cur.pos;
    if (parse_ident(cur) != "x") throw ParseError("expected 'x'", at);
    cur.expect(')', "to close the argument");
    return k;
}

}  // namespace

fourier::TrigPoly parse_symbol_expr(const std::string& text) {
    std::map<int, fourier::Complex> coeffs;
    Cursor cur{text};
    if (cur.done()) throw ParseError("empty expression", 0);

    bool first = true;
    while (!cur.done()) {
        double sign = 1.0;
        if (cur.eat('+')) {
            sign = 1.0;
        } else if (cur.eat('-')) {
            sign = -1.0;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", cur.pos);
        }
        first = false;

        double coef = 1.0;
        bool have_coef = false;
        cur.skip_ws();
        if (cur.pos < cur.s.size() &&
            (std::isdigit(static_cast<unsigned char>(cur.s[cur.pos])) || cur.s[cur.pos] == '.')) {
            coef = parse_number(cur);
            have_coef = true;
        }
        coef *= sign;

        bool have_trig = false;
        if (have_coef) {
            if (cur.eat('*')) have_trig = true;  // number '*' trig
        } else {
            have_trig = true;  // bare trig term with unit coefficient
        }

        if (have_trig) {
            cur.skip_ws();
            const std::size_t at = cur.pos;
            const std::string fn = parse_ident(cur);
            if (fn.empty()) throw ParseError("expected a function name after '*'", at);
            if (fn != "cos" && fn != "sin")
                throw ParseError("unsupported function name '" + fn + "'", at);
            const int k = parse_trig_arg(cur);
            if (fn == "cos") {
                coeffs[k] += fourier::Complex(coef / 2.0, 0.0);
                coeffs[-k] += fourier::Complex(coef / 2.0, 0.0);
            } else {
                coeffs[k] += fourier::Complex(0.0, -coef / 2.0);   // c/(2i)
                coeffs[-k] += fourier::Complex(0.0, coef / 2.0);
            }
        } else {
            coeffs[0] += fourier::Complex(coef, 0.0);
        }
    }
    return fourier::TrigPoly::from_coeffs(coeffs);
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string symbol_to_text(const fourier::TrigPoly& p) {
    if (!p.is_real_valued(1e-12))
        throw std::domain_error("symbol_to_text: table is not real-valued");
    std::string out;
    auto append = [&](double coef, const std::string& body) {
        if (coef == 0.0) return;
        if (out.empty()) {
            if (coef < 0.0) out += "-";
        } else {
            out += coef < 0.0 ? " - " : " + ";
        }
        const double a = std::abs(coef);
        out += body.empty() ? fmt(a) : fmt(a) + "*" + body;
    };

    append(p.coeff(0).real(), "");
    for (int k = 1; k <= p.degree(); ++k) {
        const auto c = p.coeff(k);
        append(2.0 * c.real(), "cos(" + std::to_string(k) + "*x)");
        append(-2.0 * c.imag(), "sin(" + std::to_string(k) + "*x)");
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace szego::cli

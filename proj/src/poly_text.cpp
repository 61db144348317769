#include "hharm/poly_text.hpp"

#include <array>
#include <cctype>
#include <string_view>
#include <vector>

namespace hharm {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string gaussian_str(const GaussianRational& g) {
    // Both parts nonzero; rendered inside parentheses by the caller.
    std::string out = rational_str(g.re);
    Rational im = g.im;
    if (im > 0) {
        out += "+";
    } else {
        out += "-";
        im = -im;
    }
    if (im != 1) out += rational_str(im) + "*";
    out += "i";
    return out;
}

struct RenderedTerm {
    bool negative = false;
    std::string text;
};

std::string pi_scalar_str(const PiScalar& s);

// One pi-Laurent term q * pi^k times an optional monomial string.
RenderedTerm render_single(const GaussianRational& g, int k, const std::string& mono) {
    RenderedTerm out;
    std::vector<std::string> num, den;
    Integer n, d;
    bool imaginary = false;
    if (g.im == 0) {
        out.negative = g.re < 0;
        Rational a = out.negative ? Rational(-g.re) : g.re;
        n = a.get_num();
        d = a.get_den();
    } else if (g.re == 0) {
        out.negative = g.im < 0;
        Rational a = out.negative ? Rational(-g.im) : g.im;
        n = a.get_num();
        d = a.get_den();
        imaginary = true;
    } else {
        num.push_back("(" + gaussian_str(g) + ")");
        n = 1;
        d = 1;
    }
    if (num.empty() && (n != 1 || (mono.empty() && k <= 0 && !imaginary)))
        num.push_back(n.get_str());
    if (imaginary) num.push_back("i");
    if (k > 0) num.push_back(k == 1 ? "pi" : "pi^" + std::to_string(k));
    if (!mono.empty()) num.push_back(mono);
    if (d != 1) den.push_back(d.get_str());
    if (k < 0) den.push_back(k == -1 ? "pi" : "pi^" + std::to_string(-k));

    out.text = join(num, "*");
    if (!den.empty())
        out.text += "/" + (den.size() == 1 ? den[0] : "(" + join(den, "*") + ")");
    return out;
}

RenderedTerm render_coeff(const PiScalar& c, const std::string& mono) {
    if (c.terms().size() == 1) {
        const auto& [k, g] = *c.terms().begin();
        return render_single(g, k, mono);
    }
    RenderedTerm out;
    out.text = "(" + pi_scalar_str(c) + ")";
    if (!mono.empty()) out.text += "*" + mono;
    return out;
}

std::string assemble(std::vector<RenderedTerm> rendered) {
    if (rendered.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < rendered.size(); ++i) {
        if (i == 0)
            out += rendered[i].negative ? "-" : "";
        else
            out += rendered[i].negative ? " - " : " + ";
        out += rendered[i].text;
    }
    return out;
}

std::string pi_scalar_str(const PiScalar& s) {
    std::vector<RenderedTerm> rendered;
    for (const auto& [k, g] : s.terms()) rendered.push_back(render_single(g, k, ""));
    return assemble(std::move(rendered));
}

template <int N>
std::string poly_str(const Poly<N>& p, const std::array<const char*, N>& names) {
    std::vector<RenderedTerm> rendered;
    for (const auto& [e, c] : p.terms()) {
        std::vector<std::string> factors;
        for (int i = 0; i < N; ++i) {
            if (e[i] == 0) continue;
            std::string f = names[i];
            if (e[i] > 1) f += "^" + std::to_string(e[i]);
            factors.push_back(std::move(f));
        }
        rendered.push_back(render_coeff(c, join(factors, "*")));
    }
    return assemble(std::move(rendered));
}

const PiScalar kImagUnit{GaussianRational(Rational(0), Rational(1))};

}  // namespace

std::string to_string(const PiScalar& s) { return pi_scalar_str(s); }

std::string to_string(const HPoly& p) { return poly_str<3>(p, {"z", "zbar", "t"}); }

std::string to_string(const CenterPoly& p) { return poly_str<4>(p, {"z0", "zbar0", "t0", "R"}); }

std::string to_string_xyt(const HPoly& p) {
    // z -> x + iy, zbar -> x - iy in a ring read as (x, y, t).
    HPoly x = hpoly_z(), y = hpoly_zbar();
    HPoly iy = y;
    iy.scale(kImagUnit);
    std::array<HPoly, 3> images{x + iy, x - iy, hpoly_t()};
    return poly_str<3>(substitute<3, 3>(p, images), {"x", "y", "t"});
}

std::string to_string_xyt(const CenterPoly& p) {
    CenterPoly x = CenterPoly::variable(0), y = CenterPoly::variable(1);
    CenterPoly iy = y;
    iy.scale(kImagUnit);
    std::array<CenterPoly, 4> images{x + iy, x - iy, CenterPoly::variable(2),
                                     CenterPoly::variable(3)};
    return poly_str<4>(substitute<4, 4>(p, images), {"x0", "y0", "t0", "R"});
}

namespace {

struct Parser {
    std::string_view s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw PolyParseError("polynomial parse error at position " + std::to_string(pos) + ": " +
                             msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Integer parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected an integer");
        return Integer(std::string(s.substr(start, pos - start)), 10);
    }

    HPoly parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return HPoly::constant(PiScalar(Rational(parse_uint())));
        if (c == '(') {
            ++pos;
            HPoly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string_view name = s.substr(start, pos - start);
            if (name == "z") return hpoly_z();
            if (name == "zbar") return hpoly_zbar();
            if (name == "t") return hpoly_t();
            if (name == "i") return HPoly::constant(kImagUnit);
            if (name == "pi") return HPoly::constant(PiScalar::pi_term(GaussianRational(1), 1));
            fail("unknown symbol '" + std::string(name) + "' (expected z, zbar, t, i or pi)");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    HPoly parse_power() {
        HPoly base = parse_atom();
        if (eat('^')) {
            Integer e = parse_uint();
            if (e > 512) fail("exponent too large");
            return pow(base, static_cast<int>(e.get_ui()));
        }
        return base;
    }

    HPoly parse_factor() {
        bool negative = false;
        while (true) {
            if (eat('-'))
                negative = !negative;
            else if (eat('+'))
                continue;
            else
                break;
        }
        HPoly p = parse_power();
        return negative ? -p : p;
    }

    HPoly parse_term() {
        HPoly acc = parse_factor();
        while (true) {
            if (eat('*')) {
                acc *= parse_factor();
            } else if (eat('/')) {
                HPoly rhs = parse_factor();
                acc = divide_by_constant(acc, rhs);
            } else {
                break;
            }
        }
        return acc;
    }

    HPoly divide_by_constant(HPoly lhs, const HPoly& rhs) {
        if (rhs.is_zero()) fail("division by zero");
        if (rhs.terms().size() != 1 || rhs.terms().begin()->first != HPoly::Expo{})
            fail("division is only supported by nonzero scalar constants");
        auto inv = rhs.terms().begin()->second.inverted_scalar();
        if (!inv) fail("divisor is not invertible in the scalar ring");
        return lhs.scale(*inv);
    }

    HPoly parse_expr() {
        HPoly acc = parse_term();
        while (true) {
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                break;
        }
        return acc;
    }
};

}  // namespace

HPoly parse_poly(const std::string& text) {
    Parser parser{text};
    HPoly p = parser.parse_expr();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("trailing input");
    return p;
}

}  // namespace hharm

#include "hharm/hpoly.hpp"

#include <stdexcept>

namespace hharm {

namespace {

const PiScalar kHalf{make_rational(1, 2)};
const PiScalar kI{GaussianRational(Rational(0), Rational(1))};
const PiScalar kMinusI{GaussianRational(Rational(0), Rational(-1))};
const PiScalar kMinusHalfI{GaussianRational(Rational(0), make_rational(-1, 2))};

HPoly derive(const HPoly& p, int v) {
    HPoly out;
    for (const auto& [e, c] : p.terms()) {
        if (e[v] == 0) continue;
        auto d = e;
        d[v] -= 1;
        out.add_term(d, c * PiScalar(Rational(e[v])));
    }
    return out;
}

}  // namespace

HPoly hpoly_z(int power) { return HPoly::variable(var::z, power); }
HPoly hpoly_zbar(int power) { return HPoly::variable(var::zbar, power); }
HPoly hpoly_t(int power) { return HPoly::variable(var::t, power); }

HPoly hpoly_x() {
    HPoly p = hpoly_z() + hpoly_zbar();
    return p.scale(kHalf);
}

HPoly hpoly_y() {
    HPoly p = hpoly_z() - hpoly_zbar();
    return p.scale(kMinusHalfI);  // 1/(2i) = -i/2
}

HPoly d_z(const HPoly& p) { return derive(p, var::z); }
HPoly d_zbar(const HPoly& p) { return derive(p, var::zbar); }
HPoly d_t(const HPoly& p) { return derive(p, var::t); }

HPoly apply_field(FieldTag f, const HPoly& p) {
    switch (f) {
        case FieldTag::X: {
            // d_z + d_zbar + 2y d_t, 2y = -i(z - zbar)
            HPoly coef = (hpoly_z() - hpoly_zbar()).scale(kMinusI);
            return d_z(p) + d_zbar(p) + coef * d_t(p);
        }
        case FieldTag::Y: {
            // i(d_z - d_zbar) - 2x d_t, 2x = z + zbar
            HPoly angular = (d_z(p) - d_zbar(p)).scale(kI);
            return angular - (hpoly_z() + hpoly_zbar()) * d_t(p);
        }
        case FieldTag::T:
            return d_t(p);
    }
    throw std::logic_error("apply_field: unknown tag");
}

HPoly sub_laplacian(const HPoly& p) {
    return apply_field(FieldTag::X, apply_field(FieldTag::X, p)) +
           apply_field(FieldTag::Y, apply_field(FieldTag::Y, p));
}

HPoly laplace_beltrami(const HPoly& p) { return sub_laplacian(p) + d_t(d_t(p)); }

HPoly conjugated(const HPoly& p) {
    HPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term({e[1], e[0], e[2]}, c.conjugated_scalar());
    return out;
}

HPoly real_part(const HPoly& p) {
    HPoly out = p + conjugated(p);
    return out.scale(kHalf);
}

HPoly imag_part(const HPoly& p) {
    HPoly out = p - conjugated(p);
    return out.scale(kMinusHalfI);
}

std::optional<int> homogeneous_degree(const HPoly& p) {
    if (p.is_zero()) throw std::domain_error("homogeneous_degree: zero polynomial");
    std::optional<int> deg;
    for (const auto& [e, c] : p.terms()) {
        int w = e[0] + e[1] + 2 * e[2];
        if (!deg)
            deg = w;
        else if (*deg != w)
            return std::nullopt;
    }
    return deg;
}

namespace {

template <typename V>
std::vector<V> value_powers(const V& base, int max_expo, const V& one) {
    std::vector<V> p;
    p.reserve(max_expo + 1);
    p.push_back(one);
    for (int e = 1; e <= max_expo; ++e) p.push_back(p.back() * base);
    return p;
}

}  // namespace

PiScalar evaluate_exact(const HPoly& p, const Point& at) {
    GaussianRational z(at.x, at.y), zb(at.x, -at.y);
    int mz = 0, mb = 0, mt = 0;
    for (const auto& [e, c] : p.terms()) {
        mz = std::max(mz, e[0]);
        mb = std::max(mb, e[1]);
        mt = std::max(mt, e[2]);
    }
    auto zp = value_powers(z, mz, GaussianRational(1));
    auto bp = value_powers(zb, mb, GaussianRational(1));
    auto tp = value_powers(at.t, mt, Rational(1));
    PiScalar acc;
    for (const auto& [e, c] : p.terms()) acc += c * PiScalar(zp[e[0]] * bp[e[1]] * GaussianRational(tp[e[2]]));
    return acc;
}

std::complex<double> evaluate(const HPoly& p, const RealPoint& at) {
    return compile(p).eval({at.x, at.y}, at.t);
}

double evaluate_real(const HPoly& p, const RealPoint& at) { return evaluate(p, at).real(); }

namespace {

// Shared translation core: substitute z -> Z, zbar -> Zb, t -> T in an
// M-variable target ring that also hosts images of z, zbar, t.
template <int M>
Poly<M> translate_with(const HPoly& p, const Poly<M>& Z, const Poly<M>& Zb, const Poly<M>& T) {
    std::array<Poly<M>, 3> images{Z, Zb, T};
    return substitute<3, M>(p, images);
}

}  // namespace

HPoly left_translate(const HPoly& p, const Point& center) {
    GaussianRational z0(center.x, center.y), zb0(center.x, -center.y);
    HPoly Z = HPoly::constant(PiScalar(z0)) + hpoly_z();
    HPoly Zb = HPoly::constant(PiScalar(zb0)) + hpoly_zbar();
    // t -> t0 + t + 2 Im(z0 zbar) = t0 + t + i zbar0 z - i z0 zbar
    HPoly T = HPoly::constant(PiScalar(center.t)) + hpoly_t() +
              hpoly_z().scale(PiScalar(zb0) * kI) + hpoly_zbar().scale(PiScalar(z0) * kMinusI);
    return translate_with<3>(p, Z, Zb, T);
}

TransPoly left_translate_symbolic(const HPoly& p) {
    auto v = [](int i) { return TransPoly::variable(i); };
    TransPoly Z = v(0) + v(3);    // z + z0
    TransPoly Zb = v(1) + v(4);   // zbar + zbar0
    TransPoly T = v(2) + v(5) + (v(4) * v(0)).scale(kI) + (v(3) * v(1)).scale(kMinusI);
    return translate_with<6>(p, Z, Zb, T);
}

CenterPoly embed_center(const HPoly& p) {
    CenterPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term({e[0], e[1], e[2], 0}, c);
    return out;
}

CenterPoly conjugated(const CenterPoly& p) {
    CenterPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term({e[1], e[0], e[2], e[3]}, c.conjugated_scalar());
    return out;
}

CenterPoly evaluate_at_center(const CenterPoly& avg, const Point& center) {
    GaussianRational z0(center.x, center.y), zb0(center.x, -center.y);
    std::array<Poly<4>, 4> images{
        CenterPoly::constant(PiScalar(z0)),
        CenterPoly::constant(PiScalar(zb0)),
        CenterPoly::constant(PiScalar(center.t)),
        CenterPoly::variable(var::R),
    };
    return substitute<4, 4>(avg, images);
}

std::complex<double> evaluate(const CenterPoly& avg, const RealPoint& center, double R) {
    std::complex<double> z0{center.x, center.y}, zb0{center.x, -center.y};
    int m0 = 0, m1 = 0, m2 = 0, m3 = 0;
    for (const auto& [e, c] : avg.terms()) {
        m0 = std::max(m0, e[0]);
        m1 = std::max(m1, e[1]);
        m2 = std::max(m2, e[2]);
        m3 = std::max(m3, e[3]);
    }
    const std::complex<double> one{1.0, 0.0};
    auto p0 = value_powers(z0, m0, one);
    auto p1 = value_powers(zb0, m1, one);
    auto p2 = value_powers(std::complex<double>{center.t, 0.0}, m2, one);
    auto p3 = value_powers(std::complex<double>{R, 0.0}, m3, one);
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [e, c] : avg.terms())
        acc += c.to_complex() * p0[e[0]] * p1[e[1]] * p2[e[2]] * p3[e[3]];
    return acc;
}

CompiledPoly compile(const HPoly& p) {
    CompiledPoly cp;
    cp.terms.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) {
        cp.terms.push_back({e[0], e[1], e[2], c.to_complex()});
        cp.max_zpow = std::max({cp.max_zpow, e[0], e[1]});
        cp.max_tpow = std::max(cp.max_tpow, e[2]);
    }
    return cp;
}

std::complex<double> CompiledPoly::eval(std::complex<double> z, double t) const {
    constexpr int kStack = 64;
    std::complex<double> zp_buf[kStack + 1];
    double tp_buf[kStack + 1];
    if (max_zpow > kStack || max_tpow > kStack) {
        // Degrees beyond the fast path: recompute powers per term.
        std::complex<double> acc{0.0, 0.0};
        for (const auto& tm : terms)
            acc += tm.coeff * std::pow(z, tm.a) * std::pow(std::conj(z), tm.b) * std::pow(t, tm.c);
        return acc;
    }
    zp_buf[0] = {1.0, 0.0};
    for (int i = 1; i <= max_zpow; ++i) zp_buf[i] = zp_buf[i - 1] * z;
    tp_buf[0] = 1.0;
    for (int i = 1; i <= max_tpow; ++i) tp_buf[i] = tp_buf[i - 1] * t;
    std::complex<double> acc{0.0, 0.0};
    for (const auto& tm : terms)
        acc += tm.coeff * (zp_buf[tm.a] * std::conj(zp_buf[tm.b])) * tp_buf[tm.c];
    return acc;
}

double CompiledPoly::eval_real(const RealPoint& p) const { return eval({p.x, p.y}, p.t).real(); }

}  // namespace hharm

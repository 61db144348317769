#include "hharm/spherical.hpp"

#include <stdexcept>

namespace hharm {

Rational coeff_C(int l, int j) {
    if (l < 0 || j < 0) throw std::domain_error("coeff_C: negative argument");
    if (j == 0) return 1;
    Rational prod = 1;
    for (int i = 0; i < j; ++i) prod *= make_rational(1 + 2 * (l + i), 2);  // 1/2 + l + i
    prod /= Rational(factorial(j));
    prod.canonicalize();
    return prod;
}

HPoly r_poly(int k, int l, int m) {
    if (k < 0 || l < 0 || m < 0) throw std::domain_error("r_poly: negative index");
    const PiScalar i{GaussianRational(Rational(0), Rational(1))};
    HPoly izz = (hpoly_z() * hpoly_zbar()).scale(i);
    HPoly w = hpoly_t() + izz;
    HPoly wbar = hpoly_t() - izz;

    std::vector<HPoly> wp{HPoly::constant(PiScalar(1))}, wbp{HPoly::constant(PiScalar(1))};
    for (int e = 1; e <= m; ++e) {
        wp.push_back(wp.back() * w);
        wbp.push_back(wbp.back() * wbar);
    }

    HPoly sum;
    for (int j = 0; j <= m; ++j) {
        HPoly term = wp[m - j] * wbp[j];
        sum += term.scale(PiScalar(coeff_C(l, j) * coeff_C(k, m - j)));
    }
    return sum.scale(PiScalar(Rational(factorial(m))));
}

HPoly spherical_harmonic(const HarmonicIndex& idx) {
    if (idx.k < 0 || idx.l < 0 || idx.m < 0)
        throw std::domain_error("spherical_harmonic: negative index");
    if (idx.k != 0 && idx.l != 0)
        throw std::domain_error("spherical_harmonic: invalid index, k*l must be 0 on H^1");
    return r_poly(idx.k, idx.l, idx.m) * hpoly_z(idx.k) * hpoly_zbar(idx.l);
}

std::vector<HarmonicIndex> basis_of_degree(int ell) {
    if (ell < 0) throw std::domain_error("basis_of_degree: negative degree");
    std::vector<HarmonicIndex> out;
    for (int k = ell; k >= 1; k -= 2) {
        int m = (ell - k) / 2;
        out.push_back({k, 0, m});
        out.push_back({0, k, m});
    }
    if (ell % 2 == 0) out.push_back({0, 0, ell / 2});
    return out;
}

}  // namespace hharm

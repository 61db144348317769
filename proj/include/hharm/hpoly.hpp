#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "hharm/point.hpp"
#include "hharm/polynomial.hpp"

namespace hharm {

// HPoly: polynomial in (z, zbar, t) over PiScalar; exponent triple (a, b, c)
// stands for z^a zbar^b t^c. CenterPoly: polynomial in (z0, zbar0, t0, R).
// TransPoly: polynomial in (z, zbar, t, z0, zbar0, t0) produced by symbolic
// left translation.
using HPoly = Poly<3>;
using CenterPoly = Poly<4>;
using TransPoly = Poly<6>;

namespace var {
inline constexpr int z = 0, zbar = 1, t = 2;
inline constexpr int z0 = 0, zbar0 = 1, t0 = 2, R = 3;
}  // namespace var

enum class FieldTag { X, Y, T };

HPoly hpoly_z(int power = 1);
HPoly hpoly_zbar(int power = 1);
HPoly hpoly_t(int power = 1);
HPoly hpoly_x();  // (z + zbar)/2
HPoly hpoly_y();  // (z - zbar)/(2i)

HPoly d_z(const HPoly& p);
HPoly d_zbar(const HPoly& p);
HPoly d_t(const HPoly& p);

// Left-invariant derivations: X = d_x + 2y d_t, Y = d_y - 2x d_t, T = d_t,
// with d_x = d_z + d_zbar and d_y = i(d_z - d_zbar) on (z, zbar) monomials.
HPoly apply_field(FieldTag f, const HPoly& p);
HPoly sub_laplacian(const HPoly& p);       // X(XP) + Y(YP)
HPoly laplace_beltrami(const HPoly& p);    // sub_laplacian + d_t^2

HPoly conjugated(const HPoly& p);  // swaps z and zbar exponents, conjugates coefficients
HPoly real_part(const HPoly& p);  // (P + conj P)/2
HPoly imag_part(const HPoly& p);  // (P - conj P)/(2i)

// Weighted degree a + b + 2c if all monomials agree, nullopt when mixed.
// Zero polynomial is a domain error.
std::optional<int> homogeneous_degree(const HPoly& p);

PiScalar evaluate_exact(const HPoly& p, const Point& at);
std::complex<double> evaluate(const HPoly& p, const RealPoint& at);
double evaluate_real(const HPoly& p, const RealPoint& at);

// P(p . q) as a polynomial in q = (z, zbar, t); exact rational center.
HPoly left_translate(const HPoly& p, const Point& center);
// Same with the center kept symbolic as (z0, zbar0, t0).
TransPoly left_translate_symbolic(const HPoly& p);

// P renamed to the center variables (z0, zbar0, t0), R-exponent 0.
CenterPoly embed_center(const HPoly& p);

CenterPoly conjugated(const CenterPoly& p);
// Substitute an exact center, leaving a polynomial in R alone.
CenterPoly evaluate_at_center(const CenterPoly& avg, const Point& center);
std::complex<double> evaluate(const CenterPoly& avg, const RealPoint& center, double R);

// Flattened double-precision form for quadrature inner loops.
struct CompiledPoly {
    struct Term {
        int a, b, c;
        std::complex<double> coeff;
    };
    std::vector<Term> terms;
    int max_zpow = 0;
    int max_tpow = 0;

    std::complex<double> eval(std::complex<double> z, double t) const;
    double eval_real(const RealPoint& p) const;
};

CompiledPoly compile(const HPoly& p);

}  // namespace hharm

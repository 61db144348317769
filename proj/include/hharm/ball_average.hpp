#pragma once

#include <array>
#include <string>
#include <vector>

#include "hharm/hpoly.hpp"
#include "hharm/spherical.hpp"

namespace hharm {

// One term of P(p0 . q) in cylindrical coordinates q = (r e^{i theta}, t):
//   coeff * z0^o0 zbar0^o1 t0^o2 * e^{i phase theta} * r^radial * t^vertical.
struct CylindricalTerm {
    std::array<int, 3> outer{};  // z0, zbar0, t0 exponents
    int phase = 0;
    int radial = 0;
    int vertical = 0;
    PiScalar coeff;
};

// After integrating theta and t out the symbolic factor (R^4 - r^4)^{c/2}
// remains, carried as the odd exponent tag half_power = c.
struct RadialTerm {
    std::array<int, 3> outer{};
    int radial = 0;
    int half_power = 0;
    PiScalar coeff;
};

// coeff * R^R_exp, the value of one fully reduced radial integral.
struct RadialValue {
    PiScalar coeff;
    int R_exp = 0;
};

// Exact mean over the gauge ball: polynomial in (z0, zbar0, t0, R).
using AverageResult = CenterPoly;

struct DefectReport {
    CenterPoly defect;  // ball average minus point value at the center
    bool is_strongly_harmonic = false;
};

struct ClassificationRow {
    HarmonicIndex index;
    int degree = 0;
    bool strongly_harmonic = false;
    std::string defect_leading_term;  // "0" when strongly harmonic
};

using ClassificationTable = std::vector<ClassificationRow>;

std::vector<CylindricalTerm> cylindrical_expand(const TransPoly& p);

// Integrate e^{i phase theta} over [0, 2pi]: only phase 0 survives, x 2pi.
std::vector<CylindricalTerm> angular_average(const std::vector<CylindricalTerm>& terms);

// Integrate t^n over |t| <= sqrt(R^4 - r^4): 0 for odd n, else
// 2 (R^4 - r^4)^{(n+1)/2} / (n+1).
std::vector<RadialTerm> vertical_integral(const std::vector<CylindricalTerm>& terms);

// Integral of r^a (R^4 - r^4)^{c/2} over [0, R]
//   = 1/4 R^{a+1+2c} B((a+1)/4, c/2 + 1),
// exact via Gamma at integers and half-integers. a must be odd (the theta
// integral leaves even r-powers and the Jacobian contributes one more).
RadialValue radial_integral(int a, int c);

AverageResult ball_average(const HPoly& p);

DefectReport harmonicity_defect(const HPoly& p);

// Rows for every basis index of degree <= max_degree, in basis order.
// parallelism 0 means one worker per hardware thread.
ClassificationTable classify_up_to_degree(int max_degree, unsigned parallelism = 0);

// Ball average of P^m_{k,l} specialized at center 0; polynomial in R alone.
CenterPoly mean_at_origin(const HarmonicIndex& idx);

}  // namespace hharm

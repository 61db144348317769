#pragma once

#include <functional>
#include <stdexcept>

#include "hharm/hpoly.hpp"
#include "hharm/point.hpp"

namespace hharm {

// Raised when an integrand sample comes back non-finite.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tensor Gauss-Legendre node counts per axis of the gauge-polar grid, plus
// the order multiplier used for the refined re-evaluation.
struct QuadratureSpec {
    int radial_order = 64;
    int vertical_order = 64;
    int angular_order = 64;
    int refinement_factor = 2;
};

using Integrand = std::function<double(const RealPoint&)>;

// Lebesgue integral of f over the gauge ball B(center, R). The ball is
// parametrized by gauge-polar coordinates
//   q = center . (rho sqrt(cos phi) e^{i theta}, rho^2 sin phi),
//   rho in (0, R], phi in [-pi/2, pi/2], theta in [0, 2pi),
// with exact Jacobian rho^3, so polynomial integrands are trigonometric
// polynomials on a box and the rule converges at machine-precision rates.
// parallelism 0 means one worker per hardware thread; partial sums are per
// rho-slice, so results do not depend on the worker count.
double quad_ball(const Integrand& f, const RealPoint& center, double R, const QuadratureSpec& spec,
                 unsigned parallelism = 0);

struct QuadEstimate {
    double value = 0;      // refined-order result
    double abs_error = 0;  // |refined - base|, floored near machine epsilon
};

QuadEstimate quad_ball_estimate(const Integrand& f, const RealPoint& center, double R,
                                const QuadratureSpec& spec, unsigned parallelism = 0);

struct KernelMvpResult {
    RealPoint center;
    double radius = 0;
    double ratio = 0;
    double point_value = 0;
    double abs_error_estimate = 0;
};

// Weighted volume mean u(p) = (1/c) int_{B(0,R)} u(pq) w(q) dq with the
// horizontal-gradient kernel w(q) = |z|^2 / sqrt(|z|^4 + t^2), valid for
// real parts of L-harmonic polynomials. The denominator depends only on
// (R, spec) and is cached.
KernelMvpResult kernel_mvp_ratio(const HPoly& u, const RealPoint& center, double R,
                                 const QuadratureSpec& spec, unsigned parallelism = 0);

enum class MollifierKind { ExpBump, CharBall };

// (u * psi_eps)(p) = int u(p q^{-1}) psi_eps(q) dq with psi_eps(q) =
// eps^{-4} psi(delta_{1/eps} q). ExpBump: psi = C exp(-1/(1 - N(q)^4)) on
// N < 1, normalized numerically once per spec. CharBall: normalized ball
// indicator, so the convolution is the plain ball average.
double mollifier_convolve(const HPoly& u, const RealPoint& p, double epsilon, MollifierKind kind,
                          const QuadratureSpec& spec, unsigned parallelism = 0);

// sup of u over the gauge sphere N = r, by low-discrepancy sampling of the
// chart (theta, phi) -> (r cos^{1/2}(phi) e^{i theta}, r^2 sin phi) followed
// by a local pattern search around the best sample. samples >= 1000.
double sphere_sup(const HPoly& u, double r, long samples);

struct ThreeSpheresResult {
    double r1 = 0, r = 0, r2 = 0;
    double m1 = 0, m = 0, m2 = 0;
    double rhs = 0;
    bool satisfied = false;
};

// M(r) <= [M(r1)(r^{-2} - r2^{-2}) + M(r2)(r1^{-2} - r^{-2})] / (r1^{-2} - r2^{-2})
// for strongly harmonic u, with M = sphere_sup; exponent -2 = 2 - Q.
ThreeSpheresResult three_spheres_check(const HPoly& u, double r1, double r, double r2,
                                       long samples);

// Pansu quotient (u(p e^{h field}) - u(p)) / h; field must be X or Y and
// the flow is exact: p e^{hX} = p . (h, 0, 0), p e^{hY} = p . (0, h, 0).
double difference_quotient(const HPoly& u, const RealPoint& p, FieldTag field, double h);

}  // namespace hharm

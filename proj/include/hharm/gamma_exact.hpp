#pragma once

#include "hharm/pi_scalar.hpp"
#include "hharm/rational.hpp"

namespace hharm {

// Gamma(x) for positive integer or half-integer x, represented exactly as
// rational_part * sqrt(pi)^sqrt_pi_power with sqrt_pi_power in {0, 1}.
// Gamma(n) = (n-1)!, Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!).
struct GammaValue {
    Rational rational_part;
    int sqrt_pi_power = 0;
};

GammaValue gamma_int_or_half(const Rational& x);

// B(x, y) = Gamma(x)Gamma(y)/Gamma(x+y) for positive integer or half-integer
// arguments. The sqrt(pi) factors always cancel to an even power, so the
// result is a single PiScalar term in Q or Q*pi.
PiScalar beta_int_or_half(const Rational& x, const Rational& y);

}  // namespace hharm

#include "hharm/pi_scalar.hpp"

#include <cmath>
#include <numbers>

namespace hharm {

std::complex<double> PiScalar::to_complex() const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [k, g] : terms_) acc += hharm::to_complex(g) * std::pow(std::numbers::pi, k);
    return acc;
}

}  // namespace hharm

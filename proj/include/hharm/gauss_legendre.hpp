#pragma once

#include <vector>

namespace hharm {

// Nodes (ascending, on [-1, 1]) and weights of the n-point Gauss-Legendre
// rule. Rules are computed once per order and cached.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussLegendreRule& gauss_legendre(int order);

}  // namespace hharm

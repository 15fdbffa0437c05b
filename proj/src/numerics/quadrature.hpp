#pragma once

#include <vector>

namespace witten {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

// n-point Gauss-Legendre rule, cached per n (thread-safe).
const GaussLegendreRule& gauss_legendre(int n);

}  // namespace witten

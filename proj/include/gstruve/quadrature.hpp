#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace gstruve {

/// Gauss-Jacobi rule for  int_0^1 t^alpha (1-t)^beta g(t) dt  ~  sum_i w_i g(t_i).
struct QuadratureRule {
    double alpha;
    double beta;
    std::vector<double> nodes;    // ascending, in (0, 1)
    std::vector<double> weights;  // sum to B(alpha+1, beta+1)
};

/// Rules are built once per (n, alpha, beta) and shared read-only afterwards.
/// Requires n >= 1 and alpha, beta > -1.
std::shared_ptr<const QuadratureRule> gauss_jacobi_unit(std::size_t n, double alpha, double beta);

}  // namespace gstruve

#pragma once

#include <vector>

namespace squeezeslab::numerics {

/// Nodes and weights of a quadrature rule on a fixed interval.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

/// Composite Gauss-Legendre: [lo, hi] split into `panels` equal panels with
/// `nodes_per_panel` points each. Nodes are returned in ascending order.
QuadratureRule composite_gauss_legendre(double lo, double hi, int panels, int nodes_per_panel);

/// Fixed-order weighted sum over the rule.
template <class F>
double integrate(const QuadratureRule& rule, F&& f) {
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) sum += rule.weights[k] * f(rule.nodes[k]);
  return sum;
}

/// Composite Simpson rule on uniformly spaced samples (odd count >= 3).
double simpson(const std::vector<double>& samples, double dx);

}  // namespace squeezeslab::numerics

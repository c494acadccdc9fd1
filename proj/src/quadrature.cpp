#include "squeezeslab/quadrature.hpp"

#include <cmath>

#include "squeezeslab/constants.hpp"
#include "squeezeslab/errors.hpp"

namespace squeezeslab::numerics {

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre order must be >= 1");
  QuadratureRule rule;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);

  const int half = (n + 1) / 2;
  for (int i = 1; i <= half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double z = std::cos(constants::pi * (i - 0.25) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    const auto lo = static_cast<std::size_t>(i - 1);
    const auto hi = static_cast<std::size_t>(n - i);
    rule.nodes[lo] = -z;
    rule.nodes[hi] = z;
    rule.weights[lo] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[hi] = rule.weights[lo];
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

QuadratureRule composite_gauss_legendre(double lo, double hi, int panels, int nodes_per_panel) {
  if (!(lo < hi) || panels < 1) throw DomainError("composite rule needs lo < hi and panels >= 1");
  const QuadratureRule base = gauss_legendre(nodes_per_panel);
  const double width = (hi - lo) / panels;

  QuadratureRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(panels) * base.size());
  rule.weights.reserve(rule.nodes.capacity());
  for (int p = 0; p < panels; ++p) {
    const double centre = lo + (p + 0.5) * width;
    for (std::size_t k = 0; k < base.size(); ++k) {
      rule.nodes.push_back(centre + 0.5 * width * base.nodes[k]);
      rule.weights.push_back(0.5 * width * base.weights[k]);
    }
  }
  return rule;
}

double simpson(const std::vector<double>& samples, double dx) {
  const std::size_t n = samples.size();
  if (n < 3 || n % 2 == 0) throw DomainError("Simpson rule needs an odd number (>= 3) of samples");
  double sum = samples.front() + samples.back();
  for (std::size_t i = 1; i + 1 < n; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * samples[i];
  return sum * dx / 3.0;
}

}  // namespace squeezeslab::numerics

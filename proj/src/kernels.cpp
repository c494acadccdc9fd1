#include "squeezeslab/kernels.hpp"

#include "squeezeslab/errors.hpp"

namespace squeezeslab::kernels {

std::vector<double> linspace(double from, double to, std::size_t points) {
  if (points == 0) throw DomainError("linspace: points must be positive");
  if (points == 1) return {from};
  std::vector<double> xs(points);
  const double step = (to - from) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) xs[i] = from + step * static_cast<double>(i);
  xs.back() = to;
  return xs;
}

}  // namespace squeezeslab::kernels

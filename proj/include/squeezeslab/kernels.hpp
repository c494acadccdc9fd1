#pragma once

// Data-parallel kernels. Every kernel has a serial reference path selected by
// Exec::serial; both paths produce bit-identical results (each grid point is
// computed independently and reductions are summed in a fixed order).

#include <cstddef>
#include <exception>
#include <span>
#include <type_traits>
#include <vector>

#include "squeezeslab/quadrature.hpp"

namespace squeezeslab::kernels {

enum class Exec { serial, parallel };

/// out[i] = f(xs[i]). In the parallel path the exception of the lowest failing
/// index is rethrown after the loop.
template <class F>
auto map_grid(std::span<const double> xs, F&& f, Exec exec)
    -> std::vector<std::invoke_result_t<F&, double>> {
  using Result = std::invoke_result_t<F&, double>;
  std::vector<Result> out(xs.size());
  const auto n = static_cast<long>(xs.size());
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
    return out;
  }

  long first_failure = n;
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(squeezeslab_map_grid)
      {
        if (i < first_failure) {
          first_failure = i;
          failure = std::current_exception();
        }
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

/// sum_k w_k f(x_k); terms are evaluated in parallel, summed serially in node order.
template <class F>
double weighted_sum(const numerics::QuadratureRule& rule, F&& f, Exec exec) {
  const auto terms = map_grid(std::span<const double>(rule.nodes), f, exec);
  double sum = 0.0;
  for (std::size_t k = 0; k < terms.size(); ++k) sum += rule.weights[k] * terms[k];
  return sum;
}

/// Uniform grid of `points` values from `from` to `to` inclusive.
std::vector<double> linspace(double from, double to, std::size_t points);

}  // namespace squeezeslab::kernels

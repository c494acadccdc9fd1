#pragma once

// Test-only reference computations, derived independently of the library code.

#include <cmath>
#include <complex>
#include <random>

#include "squeezeslab/constants.hpp"

namespace oracle {

using cplx = std::complex<double>;
using squeezeslab::constants::c;

struct RT {
  cplx r;
  cplx t;
};

// Characteristic matrix of a homogeneous layer of thickness 2l in vacuum at
// normal incidence (exp(-i w t) convention). r is referred to the slab centre,
// t to free propagation over the same thickness.
inline RT transfer_matrix(cplx n, double omega, double l) {
  const cplx delta = n * omega * 2.0 * l / c;
  const cplx m11 = std::cos(delta);
  const cplx m12 = -cplx(0.0, 1.0) * std::sin(delta) / n;
  const cplx m21 = -cplx(0.0, 1.0) * n * std::sin(delta);
  const cplx m22 = std::cos(delta);
  const cplx den = m11 + m12 + m21 + m22;
  const cplx r_face = (m11 + m12 - m21 - m22) / den;
  const cplx t_face = 2.0 / den;
  const cplx free = std::exp(cplx(0.0, -2.0 * omega * l / c));
  return {r_face * free, t_face * free};
}

// Quadrature variance from second moments of b = C a + noise, with
// <a^2> = -exp(2i theta) sinh cosh, <a^dag a> = sinh^2 and <F^dag F> = noise.
inline double variance_from_moments(cplx coeff, double rho, double theta, double phi,
                                    double noise) {
  const cplx aa = -std::exp(cplx(0.0, 2.0 * theta)) * std::sinh(rho) * std::cosh(rho);
  const double ada = std::sinh(rho) * std::sinh(rho);
  const cplx bb = coeff * coeff * aa;
  const double bdb = std::norm(coeff) * ada + noise;
  return 0.25 * (2.0 * (std::exp(cplx(0.0, -2.0 * phi)) * bb).real() + 1.0 + 2.0 * bdb);
}

// Trapezoid sum of f on n equal intervals.
template <class F>
auto trapezoid(F&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  auto sum = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n; ++i) sum += f(a + i * h);
  return sum * h;
}

inline std::mt19937_64 rng(std::uint64_t seed = 20240611) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

}  // namespace oracle

#pragma once

#include <complex>
#include <limits>
#include <utility>
#include <vector>

#include "squeezeslab/numerics.hpp"
#include "squeezeslab/slab_optics.hpp"

namespace squeezeslab {

/// Single-mode squeezed coherent input |alpha, xi>, xi = rho exp(2i theta).
/// alpha never enters the variances; it is carried for completeness.
struct SqueezeParams {
  double rho = 0.0;
  double theta = 0.0;
  std::complex<double> alpha{0.0, 0.0};
};

/// Variances of the optimally rotated output quadratures (vacuum = 1/4).
struct QuadratureVariances {
  double var_x;    // squeezed quadrature
  double var_y;    // orthogonal (anti-squeezed) quadrature
  double phi_opt;  // theta + 2 delta = theta + arg C of the channel
};

/// Variance of the output quadrature rotated by phi.
double variance_vs_angle(const SlabSpec& slab, double omega, const SqueezeParams& sq, double phi,
                         Channel channel);

QuadratureVariances channel_variances(const SlabSpec& slab, double omega, const SqueezeParams& sq,
                                      Channel channel);
QuadratureVariances transmitted_variances(const SlabSpec& slab, double omega,
                                          const SqueezeParams& sq);
QuadratureVariances reflected_variances(const SlabSpec& slab, double omega,
                                        const SqueezeParams& sq);

/// var_x * var_y of either output port for a lossless slab at T = 0.
/// Throws DomainError when the slab absorbs or is above absolute zero.
double uncertainty_product_lossless(const SlabSpec& slab, double omega, const SqueezeParams& sq);

/// Closed form of the lossless product, (1/16){1 + 2|T R|^2 (cosh 2rho - 1)}.
double uncertainty_product_closed_form(double abs_t, double abs_r, double rho);

/// Extremum condition of |C|^2 in l for a constant-index slab (noise term dropped).
/// Transmitted: kB_eta sinh(4kwl/c) + eta B_kappa sin(4 eta w l/c)
///              + 2 eps_i [A+ cosh(4kwl/c) + A- cos(4 eta w l/c)].
/// Zero exactly where d|C|^2/dl vanishes.
double extremum_residual(const SlabSpec& slab, double omega, double l, Channel channel);

/// Extremum of var_x of a channel as a function of l.
struct ThicknessExtremum {
  double l;
  numerics::ExtremumKind kind;
};

struct ExtremaResult {
  std::vector<ThicknessExtremum> extrema;  // ascending in l
  bool range_too_short = false;            // range shorter than one period lambda/(4 eta)
};

/// Brackets sign changes of extremum_residual at step lambda/(40 eta), bisects to
/// relative 1e-12 in l, then classifies each root by the second difference of
/// var_x at +-lambda/(400 eta). The kind does not depend on rho > 0; var_x is
/// evaluated with rho = 1.
ExtremaResult find_extrema(const SlabSpec& slab, double omega, double l_lo, double l_hi,
                           Channel channel);

/// Half-thickness beyond which extremum_residual (transmitted) no longer changes
/// sign. +infinity for kappa = 0; NoExtremumError if the tanh argument leaves (0, 1).
double l_max(const SlabSpec& slab, double omega);

/// First-order-in-kappa roots l = (c / 4 w eta)[atan f + m pi] for both f branches:
/// {f = -8 kappa eta^2 / (eta^2 - 1)^2, f = +8 kappa / (eta^2 - 1)^2}.
std::pair<double, double> poor_absorber_roots(const ConstantIndex& index, double omega, int m);

/// l -> infinity limits of the reflected (var_x, var_y).
std::pair<double, double> asymptotic_reflected_limits(const ConstantIndex& index, double rho);

}  // namespace squeezeslab

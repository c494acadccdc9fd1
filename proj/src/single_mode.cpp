#include "squeezeslab/single_mode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "squeezeslab/constants.hpp"
#include "squeezeslab/errors.hpp"

namespace squeezeslab {

namespace {

// |eps| +- 1 and the B combinations shared by the extremum and asymptotic formulas.
struct IndexAlgebra {
  double eta, kappa;
  double eps_abs, eps_r, eps_i;
  double a_plus, a_minus;
  double b_eta, b_kappa;
};

IndexAlgebra index_algebra(const ConstantIndex& idx) {
  IndexAlgebra g{};
  g.eta = idx.eta;
  g.kappa = idx.kappa;
  g.eps_r = idx.eta * idx.eta - idx.kappa * idx.kappa;
  g.eps_i = 2.0 * idx.eta * idx.kappa;
  g.eps_abs = idx.eta * idx.eta + idx.kappa * idx.kappa;
  g.a_plus = g.eps_abs + 1.0;
  g.a_minus = g.eps_abs - 1.0;
  g.b_eta = g.a_plus * g.a_plus + 4.0 * idx.eta * idx.eta;
  g.b_kappa = g.a_minus * g.a_minus - 4.0 * idx.kappa * idx.kappa;
  return g;
}

QuadratureVariances variances_from(const ScatterCoefficients& sc, double n_bar,
                                   const SqueezeParams& sq, Channel channel) {
  const double mag2 = sc.magnitude(channel) * sc.magnitude(channel);
  const double noise = 2.0 * n_bar * sc.absorptance;
  QuadratureVariances v{};
  v.var_x = 0.25 * ((1.0 - mag2) + mag2 * std::exp(-2.0 * sq.rho) + noise);
  v.var_y = 0.25 * ((1.0 - mag2) + mag2 * std::exp(2.0 * sq.rho) + noise);
  // C^2 <a^2> carries exp(4i delta + 2i theta), so the optimum sits at theta + 2 delta.
  v.phi_opt = sq.theta + 2.0 * sc.half_phase(channel);
  return v;
}

void require_squeeze(const SqueezeParams& sq) {
  if (!(sq.rho >= 0.0)) throw DomainError("squeeze magnitude rho must be >= 0");
}

}  // namespace

double variance_vs_angle(const SlabSpec& slab, double omega, const SqueezeParams& sq, double phi,
                         Channel channel) {
  require_squeeze(sq);
  const auto sc = scatter_coefficients(slab, omega);
  const double n_bar = thermal_occupation(omega, slab.temperature);
  const double mag2 = sc.magnitude(channel) * sc.magnitude(channel);
  const double sh = std::sinh(sq.rho);
  const double ch = std::cosh(sq.rho);
  const double angle = 2.0 * (phi - (sq.theta + 2.0 * sc.half_phase(channel)));
  return 0.25 * (1.0 + 2.0 * mag2 * (sh * sh - sh * ch * std::cos(angle)) +
                 2.0 * n_bar * sc.absorptance);
}

QuadratureVariances channel_variances(const SlabSpec& slab, double omega, const SqueezeParams& sq,
                                      Channel channel) {
  require_squeeze(sq);
  const auto sc = scatter_coefficients(slab, omega);
  return variances_from(sc, thermal_occupation(omega, slab.temperature), sq, channel);
}

QuadratureVariances transmitted_variances(const SlabSpec& slab, double omega,
                                          const SqueezeParams& sq) {
  return channel_variances(slab, omega, sq, Channel::transmitted);
}

QuadratureVariances reflected_variances(const SlabSpec& slab, double omega,
                                        const SqueezeParams& sq) {
  return channel_variances(slab, omega, sq, Channel::reflected);
}

double uncertainty_product_lossless(const SlabSpec& slab, double omega, const SqueezeParams& sq) {
  if (refractive_index(slab.model, omega).imag() != 0.0)
    throw DomainError("lossless uncertainty product requires kappa = 0");
  if (slab.temperature != 0.0)
    throw DomainError("lossless uncertainty product requires T = 0");
  const auto v = transmitted_variances(slab, omega, sq);
  return v.var_x * v.var_y;
}

double uncertainty_product_closed_form(double abs_t, double abs_r, double rho) {
  const double tr2 = abs_t * abs_t * abs_r * abs_r;
  return (1.0 + 2.0 * tr2 * (std::cosh(2.0 * rho) - 1.0)) / 16.0;
}

double extremum_residual(const SlabSpec& slab, double omega, double l, Channel channel) {
  const auto g = index_algebra(slab.model.constant_index());
  const double u = 4.0 * omega * l / constants::c;
  const double hyp = g.kappa * u;
  const double osc = g.eta * u;
  if (channel == Channel::transmitted) {
    return g.kappa * g.b_eta * std::sinh(hyp) + g.eta * g.b_kappa * std::sin(osc) +
           2.0 * g.eps_i * (g.a_plus * std::cosh(hyp) + g.a_minus * std::cos(osc));
  }
  return (2.0 * g.kappa * g.eps_abs * std::sinh(hyp) + g.eps_i * std::cosh(hyp)) * std::cos(osc) -
         g.eps_i +
         (2.0 * g.eta * g.eps_abs * std::cosh(hyp) +
          (g.eps_abs * g.eps_abs + g.eps_r) * std::sinh(hyp)) *
             std::sin(osc);
}

ExtremaResult find_extrema(const SlabSpec& slab, double omega, double l_lo, double l_hi,
                           Channel channel) {
  validate(slab);
  if (!(omega > 0.0)) throw DomainError("angular frequency must be positive");
  if (!(l_lo >= 0.0) || !(l_hi > l_lo)) throw DomainError("thickness range must satisfy 0 <= lo < hi");
  const auto& idx = slab.model.constant_index();
  const double lambda = vacuum_wavelength(omega);

  ExtremaResult result;
  if (l_hi - l_lo < lambda / (4.0 * idx.eta)) {
    result.range_too_short = true;
    return result;
  }

  const auto residual = [&](double l) { return extremum_residual(slab, omega, l, channel); };
  const double step = lambda / (40.0 * idx.eta);
  const double probe = lambda / (400.0 * idx.eta);
  const SqueezeParams unit_squeeze{1.0, 0.0, {}};
  const auto var_x = [&](double l) {
    return channel_variances(with_half_thickness(slab, l), omega, unit_squeeze, channel).var_x;
  };
  const auto classify = [&](double l) {
    const double lo = std::max(0.0, l - probe);
    const double hi = l + probe;
    const double curvature = var_x(hi) + var_x(lo) - 2.0 * var_x(l);
    return curvature > 0.0 ? numerics::ExtremumKind::minimum : numerics::ExtremumKind::maximum;
  };

  double x0 = l_lo;
  double f0 = residual(x0);
  const auto steps = static_cast<long>(std::ceil((l_hi - l_lo) / step));
  for (long i = 1; i <= steps; ++i) {
    const double x1 = std::min(l_hi, l_lo + static_cast<double>(i) * step);
    const double f1 = residual(x1);
    if (f0 == 0.0 && x0 > l_lo) {
      result.extrema.push_back({x0, classify(x0)});
    } else if (f0 * f1 < 0.0) {
      const double root = numerics::find_root(residual, {x0, x1, f0, f1}, 1e-12 * x1);
      result.extrema.push_back({root, classify(root)});
    }
    x0 = x1;
    f0 = f1;
  }
  return result;
}

double l_max(const SlabSpec& slab, double omega) {
  validate(slab);
  if (!(omega > 0.0)) throw DomainError("angular frequency must be positive");
  const auto g = index_algebra(slab.model.constant_index());
  if (g.kappa == 0.0) return std::numeric_limits<double>::infinity();

  // The residual is H(u) + O(u) with H = kB_eta sinh + 2 eps_i A+ cosh and
  // O = eta B_kappa sin + 2 eps_i A- cos. O has amplitude
  // OSC = sqrt((eta B_kappa)^2 + (2 eps_i A-)^2); sign changes stop once |H| > OSC.
  // Writing t = tanh(kappa u), H = OSC gives a quadratic in t.
  const double osc = std::hypot(g.eta * g.b_kappa, 2.0 * g.eps_i * g.a_minus);
  const double d = osc * osc + g.kappa * g.kappa * g.b_eta * g.b_eta;
  const double disc = d - 4.0 * g.eps_i * g.eps_i * g.a_plus * g.a_plus;
  if (disc < 0.0) throw NoExtremumError("l_max equation has no real solution");
  const double base = -2.0 * g.eps_i * g.kappa * g.a_plus * g.b_eta;
  const double root = osc * std::sqrt(disc);

  double best = -1.0;
  for (const double t : {(base + root) / d, (base - root) / d}) {
    if (t > 0.0 && t < 1.0) best = std::max(best, t);
  }
  if (best <= 0.0) {
    std::ostringstream msg;
    msg << "l_max: tanh argument outside (0, 1) for eta=" << g.eta << ", kappa=" << g.kappa;
    throw NoExtremumError(msg.str());
  }
  return constants::c / (4.0 * omega * g.kappa) * std::atanh(best);
}

std::pair<double, double> poor_absorber_roots(const ConstantIndex& idx, double omega, int m) {
  const double e2m1 = idx.eta * idx.eta - 1.0;
  if (e2m1 == 0.0) throw DomainError("poor-absorber roots undefined for eta = 1");
  const double f_even = -8.0 * idx.kappa * idx.eta * idx.eta / (e2m1 * e2m1);
  const double f_odd = 8.0 * idx.kappa / (e2m1 * e2m1);
  const double scale = constants::c / (4.0 * omega * idx.eta);
  return {scale * (std::atan(f_even) + m * constants::pi),
          scale * (std::atan(f_odd) + m * constants::pi)};
}

std::pair<double, double> asymptotic_reflected_limits(const ConstantIndex& idx, double rho) {
  if (!(rho >= 0.0)) throw DomainError("squeeze magnitude rho must be >= 0");
  const auto g = index_algebra(idx);
  const std::complex<double> n{idx.eta, idx.kappa};
  const double ratio = std::norm(n * n - 1.0) / (g.b_eta + 4.0 * idx.eta * g.a_plus);
  return {0.25 * (1.0 - (1.0 - std::exp(-2.0 * rho)) * ratio),
          0.25 * (1.0 + (std::exp(2.0 * rho) - 1.0) * ratio)};
}

}  // namespace squeezeslab

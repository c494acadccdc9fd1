#include "squeezeslab/continuum.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "squeezeslab/constants.hpp"
#include "squeezeslab/errors.hpp"

namespace squeezeslab {

namespace {

using constants::c;

double gaussian_envelope(const GaussianPulseSpec& pulse, double omega) {
  const double x = pulse.length * (omega - pulse.omega_c) / (2.0 * c);
  return std::exp(-x * x);
}

}  // namespace

void validate(const GaussianPulseSpec& pulse) {
  if (!(pulse.omega_c > 0.0)) throw DomainError("carrier frequency must be positive");
  if (!(pulse.length > 0.0)) throw DomainError("pulse length must be positive");
  if (!(pulse.rho_peak >= 0.0)) throw DomainError("peak squeeze rho_I must be >= 0");
  if (!(c / pulse.length < pulse.omega_c / 20.0))
    throw DomainError("pulse too short: narrow-packet condition c/L < omega_c/20 violated");
}

double incident_squeeze(const GaussianPulseSpec& pulse, double omega, SqueezeProfile profile) {
  if (profile == SqueezeProfile::gaussian) return pulse.rho_peak * gaussian_envelope(pulse, omega);
  const double x = pulse.length * (omega - pulse.omega_c) / (2.0 * c);
  return pulse.rho_peak * (1.0 - x * x);
}

std::complex<double> incident_amplitude(const GaussianPulseSpec& pulse, double omega) {
  if (!pulse.alpha0) return {0.0, 0.0};
  return *pulse.alpha0 * std::polar(gaussian_envelope(pulse, omega), pulse.phi);
}

double spectral_prefactor(double omega, double sigma) {
  return constants::hbar * omega / (2.0 * constants::epsilon0 * c * sigma);
}

double incident_spectrum(const GaussianPulseSpec& pulse, double sigma, double omega,
                         SqueezeProfile profile) {
  if (!(omega > 0.0)) throw DomainError("angular frequency must be positive");
  const double rho = incident_squeeze(pulse, omega, profile);
  const double pre = spectral_prefactor(omega, sigma);
  if (!pulse.alpha0) return pre * std::exp(-2.0 * rho);
  const double alpha2 = std::norm(incident_amplitude(pulse, omega));
  const double coherent_phase = pulse.phi + std::arg(*pulse.alpha0);
  return pre * alpha2 *
         (std::cosh(2.0 * rho) - std::sinh(2.0 * rho) * std::cos(2.0 * (pulse.theta - coherent_phase)));
}

double scattered_spectrum_exact(const SlabSpec& slab, const GaussianPulseSpec& pulse,
                                double omega, Channel channel, SqueezeProfile profile) {
  const auto sc = scatter_coefficients(slab, omega);
  const double mag = sc.magnitude(channel);
  const double thermal = spectral_prefactor(omega, slab.sigma) *
                         thermal_occupation(omega, slab.temperature) * sc.absorptance;
  return mag * mag * incident_spectrum(pulse, slab.sigma, omega, profile) + thermal;
}

numerics::QuadratureRule pulse_band_rule(const GaussianPulseSpec& pulse,
                                         const BandOptions& options) {
  validate(pulse);
  const double unit = c / pulse.length;
  const double half = options.half_width * unit;
  return numerics::composite_gauss_legendre(pulse.omega_c - half, pulse.omega_c + half,
                                            2 * options.half_width, options.nodes_per_panel);
}

NarrowbandCoefficients narrowband_coefficients(const SlabSpec& slab, double omega_c,
                                               Channel channel) {
  validate(slab);
  if (!(omega_c > 0.0)) throw DomainError("carrier frequency must be positive");
  const auto& idx = slab.model.constant_index();
  const std::complex<double> n{idx.eta, idx.kappa};
  const double l = slab.half_thickness;
  const std::complex<double> k_prime = n / c;

  const double phase = 4.0 * omega_c * l / c;
  const auto round_trip = std::polar(std::exp(-phase * n.imag()), phase * n.real());
  const auto half_trip = std::polar(std::exp(-0.5 * phase * n.imag()), 0.5 * phase * n.real());
  const auto denom = (n + 1.0) * (n + 1.0) - (n - 1.0) * (n - 1.0) * round_trip;
  if (std::abs(denom) < 1e-14) throw SingularityError("narrow-band denominator vanishes");

  const auto gamma_t = k_prime - 1.0 / c + 2.0 * k_prime * (n - 1.0) * (n - 1.0) * round_trip / denom;
  const auto beta_t = k_prime * (n * n - 1.0) * half_trip / denom;

  const auto sc = scatter_coefficients(slab, omega_c);
  NarrowbandCoefficients out{channel, sc.coefficient(channel), gamma_t, beta_t * beta_t};
  if (channel == Channel::transmitted) return out;

  const auto gap = round_trip - 1.0;
  if (std::abs(gap) < 1e-12) {
    std::ostringstream msg;
    msg << "reflected narrow-band expansion singular: exp(4i w_c n_c l/c) = 1 at l = " << l;
    throw SingularityError(msg.str());
  }
  out.gamma = gamma_t + k_prime * (round_trip + 1.0) / gap;
  out.beta_sq = beta_t * beta_t - k_prime * k_prime * round_trip / (gap * gap);
  return out;
}

PulseParams output_pulse_params(const SlabSpec& slab, const GaussianPulseSpec& pulse,
                                Channel channel, const NarrowbandOptions& options) {
  validate(pulse);
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  PulseParams out{channel, nan, nan, nan, nan, false};

  NarrowbandCoefficients nb;
  try {
    nb = narrowband_coefficients(slab, pulse.omega_c, channel);
  } catch (const SingularityError&) {
    return out;
  }
  const double mag = std::abs(nb.c_at_center);
  if (mag == 0.0) return out;

  const double l = slab.half_thickness;
  const double eta_c = slab.model.constant_index().eta;
  const double shift_rate = nb.gamma.imag() * l;            // Im(gamma) l
  const double curvature = 8.0 * nb.beta_sq.real() * l * l;  // 8 Re(beta^2) l^2
  const double p = pulse.rho_peak * pulse.length * pulse.length / (4.0 * c * c);
  const double denom = p - curvature;

  out.delta_omega = -shift_rate / denom;
  out.rho_gamma = (pulse.rho_peak - std::log(mag)) - shift_rate * out.delta_omega;
  // L^2/4c^2 = -Im(gamma) l / (rho_G dw) = (p - b) / rho_G; the second form
  // stays finite when the shift vanishes.
  out.length_sq = 4.0 * c * c * denom / out.rho_gamma;
  out.rho_eff = out.rho_gamma *
                (1.0 - out.length_sq * out.delta_omega * out.delta_omega / (4.0 * c * c)) *
                out.length_sq / (pulse.length * pulse.length);

  out.valid = pulse.length > options.length_factor * 2.0 * l * eta_c &&
              std::abs(denom) >= options.denominator_rel * p && out.length_sq > 0.0 &&
              out.rho_gamma > 0.0 && std::isfinite(out.rho_eff);
  return out;
}

double squeezing_spectrum(const PulseParams& params, const GaussianPulseSpec& pulse,
                          double omega) {
  const double offset = omega - pulse.omega_c + params.delta_omega;
  return params.rho_gamma * (1.0 - params.length_sq * offset * offset / (4.0 * c * c));
}

double narrowband_scattered_spectrum(const PulseParams& params, const GaussianPulseSpec& pulse,
                                     double sigma, double omega) {
  return spectral_prefactor(omega, sigma) *
         std::exp(-2.0 * squeezing_spectrum(params, pulse, omega));
}

double continuum_quadrature_variance(const SlabSpec& slab, const GaussianPulseSpec& pulse,
                                     Channel channel) {
  validate(pulse);
  const auto sc = scatter_coefficients(slab, pulse.omega_c);
  const double mag = sc.magnitude(channel);
  const double noise = thermal_occupation(pulse.omega_c, slab.temperature) * sc.absorptance;
  return 0.25 * (1.0 - mag * mag * (1.0 - std::exp(-2.0 * pulse.rho_peak)) + 2.0 * noise);
}

double energy_weighted_fraction(const SlabSpec& slab, const GaussianPulseSpec& pulse,
                                Channel channel, const BandOptions& options) {
  const auto rule = pulse_band_rule(pulse, options);
  double scattered = 0.0, incident = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const double omega = rule.nodes[k];
    const double s_in = incident_spectrum(pulse, slab.sigma, omega);
    const double mag = scatter_coefficients(slab, omega).magnitude(channel);
    scattered += rule.weights[k] * mag * mag * s_in;
    incident += rule.weights[k] * s_in;
  }
  return scattered / incident;
}

}  // namespace squeezeslab

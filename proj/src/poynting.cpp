#include "squeezeslab/poynting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "squeezeslab/constants.hpp"
#include "squeezeslab/errors.hpp"
#include "squeezeslab/numerics.hpp"

namespace squeezeslab {

namespace {

using constants::c;
using constants::hbar;
using constants::pi;

double flux_prefactor(double sigma) { return hbar / (4.0 * pi * sigma); }

SlabSpec free_space(double sigma) {
  return SlabSpec{0.0, DielectricModel::constant(1.0, 0.0), sigma, 0.0};
}

}  // namespace

CoherentField::CoherentField(const SlabSpec& slab, const GaussianPulseSpec& pulse,
                             Channel channel, const BandOptions& band, double rel_tol)
    : prefactor_(flux_prefactor(slab.sigma)), peak_bound_(0.0), rel_tol_(rel_tol) {
  validate(slab);
  validate(pulse);
  if (!pulse.alpha0) throw DomainError("coherent field requires a coherent amplitude");

  auto fill = [&](Nodes& nodes, const BandOptions& opts) {
    const auto rule = pulse_band_rule(pulse, opts);
    nodes.offset.resize(rule.size());
    nodes.weighted.resize(rule.size());
    for (std::size_t k = 0; k < rule.size(); ++k) {
      const double w = rule.nodes[k];
      const auto sc = scatter_coefficients(slab, w);
      nodes.offset[k] = w - pulse.omega_c;
      nodes.weighted[k] =
          rule.weights[k] * std::sqrt(w) * sc.coefficient(channel) * incident_amplitude(pulse, w);
    }
  };
  fill(coarse_, band);
  fill(fine_, BandOptions{2 * band.nodes_per_panel, band.half_width});

  double l1 = 0.0;
  for (const auto& g : fine_.weighted) l1 += std::abs(g);
  peak_bound_ = prefactor_ * l1 * l1;
}

double CoherentField::power(const Nodes& nodes, double tau) {
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t k = 0; k < nodes.offset.size(); ++k) {
    sum += nodes.weighted[k] * std::polar(1.0, -nodes.offset[k] * tau);
  }
  return std::norm(sum);
}

double CoherentField::intensity(double tau) const {
  const double coarse = prefactor_ * power(coarse_, tau);
  const double fine = prefactor_ * power(fine_, tau);
  if (std::abs(fine - coarse) > rel_tol_ * peak_bound_) {
    throw AccuracyError("coherent Poynting integral not converged at tau = " +
                        std::to_string(tau));
  }
  return fine;
}

double CoherentField::intensity_fine(double tau) const { return prefactor_ * power(fine_, tau); }

std::vector<double> CoherentField::intensity_trace(std::span<const double> taus,
                                                   kernels::Exec exec) const {
  return kernels::map_grid(taus, [this](double tau) { return intensity(tau); }, exec);
}

double coherent_poynting(const SlabSpec& slab, const GaussianPulseSpec& pulse, double x, double t,
                         Channel channel) {
  return CoherentField(slab, pulse, channel).intensity(t - x / c);
}

double squeezed_flux(const SlabSpec& slab, const GaussianPulseSpec& pulse, Channel channel,
                     const BandOptions& band) {
  validate(slab);
  validate(pulse);
  const auto rule = pulse_band_rule(pulse, band);
  return flux_prefactor(slab.sigma) * numerics::integrate(rule, [&](double w) {
           const double s = std::sinh(incident_squeeze(pulse, w));
           const double m = scatter_coefficients(slab, w).magnitude(channel);
           return w * m * m * s * s;
         });
}

double thermal_flux(const SlabSpec& slab, const GaussianPulseSpec& pulse, Channel,
                    const BandOptions& band) {
  validate(slab);
  validate(pulse);
  if (slab.temperature == 0.0) return 0.0;
  const auto rule = pulse_band_rule(pulse, band);
  return flux_prefactor(slab.sigma) *
         numerics::integrate(rule, [&](double w) { return w * noise_moment(slab, w); });
}

PoyntingSample poynting_sample(const SlabSpec& slab, const GaussianPulseSpec& pulse, double x,
                               double t, Channel channel) {
  PoyntingSample s{x, t, 0.0, 0.0, 0.0, 0.0};
  if (pulse.alpha0) s.coherent = coherent_poynting(slab, pulse, x, t, channel);
  s.squeezed = squeezed_flux(slab, pulse, channel);
  s.thermal = thermal_flux(slab, pulse, channel);
  s.total = s.coherent + s.squeezed + s.thermal;
  return s;
}

double peak_incident_intensity(const GaussianPulseSpec& pulse, double sigma) {
  const CoherentField field(free_space(sigma), pulse, Channel::transmitted);
  const double span = pulse.length / c;
  const double tau = numerics::golden_section([&](double s) { return field.intensity_fine(s); },
                                              -span, span, 1e-6 * span,
                                              numerics::ExtremumKind::maximum);
  return field.intensity_fine(tau);
}

ParsevalResult parseval_check(const SlabSpec& slab, const GaussianPulseSpec& pulse,
                              Channel channel, const ParsevalOptions& options) {
  validate(slab);
  validate(pulse);
  if (slab.temperature > 0.0) throw DomainError("Parseval check requires T = 0");
  if (options.samples < 3 || options.samples % 2 == 0) {
    throw DomainError("Parseval check needs an odd number of samples >= 3");
  }

  const double l = slab.half_thickness;
  const double eta = refractive_index(slab.model, pulse.omega_c).real();
  const double span = 10.0 * pulse.length / c;
  double t0 = options.x / c - span;
  if (channel == Channel::reflected) t0 -= 2.0 * l / c;
  const double t1 = options.x / c + span + 4.0 * l * eta / c;

  const CoherentField field(slab, pulse, channel);
  const auto times = kernels::linspace(t0, t1, options.samples);
  const auto trace = kernels::map_grid(
      std::span<const double>(times),
      [&](double t) { return field.intensity(t - options.x / c); }, options.exec);
  const double lhs = numerics::simpson(trace, (t1 - t0) / static_cast<double>(options.samples - 1));

  BandOptions fine;
  fine.nodes_per_panel *= 2;
  const auto rule = pulse_band_rule(pulse, fine);
  const double spectrum = kernels::weighted_sum(
      rule,
      [&](double w) {
        const double m = scatter_coefficients(slab, w).magnitude(channel);
        return m * m * spectral_prefactor(w, slab.sigma) * std::norm(incident_amplitude(pulse, w));
      },
      options.exec);
  const double rhs = constants::epsilon0 * c * spectrum;
  return ParsevalResult{lhs, rhs, std::abs(lhs - rhs) / std::abs(rhs)};
}

EnvelopeParams narrowband_envelope(const SlabSpec& slab, const GaussianPulseSpec& pulse,
                                   Channel channel) {
  validate(slab);
  validate(pulse);
  const double l = slab.half_thickness;
  const double eta = refractive_index(slab.model, pulse.omega_c).real();
  if (pulse.length <= 10.0 * 2.0 * l * eta) {
    throw RegimeError("narrow-band envelope requires L_I > 20 l eta");
  }
  const auto nb = narrowband_coefficients(slab, pulse.omega_c, channel);
  const std::complex<double> a = 2.0 * l * c * nb.gamma;
  const std::complex<double> b = pulse.length * pulse.length + 32.0 * c * c * l * l * nb.beta_sq;
  if (b.real() <= 0.0) throw RegimeError("narrow-band envelope: Re B <= 0");

  const double p = (a * std::conj(b)).real();
  const double q = (a * a * std::conj(b)).real();
  const double r = b.real();
  const double bb = std::norm(b);
  const double amp = std::norm(nb.c_at_center) * pulse.length * pulse.length / std::abs(b) *
                     std::exp(-2.0 * (q - p * p / r) / bb);
  return EnvelopeParams{channel, amp, p / r, bb / r};
}

double envelope_intensity(const EnvelopeParams& env, double s0, double x, double t) {
  const double d = x - c * t + env.shift_x;
  return s0 * env.amplitude * std::exp(-2.0 * d * d / env.length_sq);
}

PulseTrain::PulseTrain(const SlabSpec& slab, const GaussianPulseSpec& pulse)
    : s0_(0.0), length_(pulse.length), half_thickness_(slab.half_thickness), eta_(0.0) {
  validate(slab);
  validate(pulse);
  const auto n = refractive_index(slab.model, pulse.omega_c);
  eta_ = n.real();
  const double l = slab.half_thickness;
  if (pulse.length >= 2.0 * l * eta_ / 5.0) {
    throw RegimeError("pulse train requires L_I < 2 l eta / 5");
  }
  s0_ = peak_incident_intensity(pulse, slab.sigma);

  const double front = std::norm(4.0 * n / ((n + 1.0) * (n + 1.0))) *
                       std::exp(-4.0 * n.imag() * pulse.omega_c * l / c);
  const double r = std::abs((n - 1.0) / (n + 1.0));
  if (!(r < 1.0)) throw DomainError("pulse train needs |r| < 1");
  const double r4 = std::pow(r, 4);
  double w = s0_ * front;
  while (true) {
    weights_.push_back(w);
    if (r4 == 0.0 || w * r4 < 1e-12 * s0_ * front) break;
    w *= r4;
  }
}

double PulseTrain::echo_shift(std::size_t m) const {
  return -2.0 * half_thickness_ * (1.0 - (2.0 * static_cast<double>(m) + 1.0) * eta_);
}

double PulseTrain::operator()(double x, double t) const {
  double sum = 0.0;
  for (std::size_t m = 0; m < weights_.size(); ++m) {
    const double d = x - c * t + echo_shift(m);
    sum += weights_[m] * std::exp(-2.0 * d * d / (length_ * length_));
  }
  return sum;
}

double pulse_train(const SlabSpec& slab, const GaussianPulseSpec& pulse, double x, double t) {
  return PulseTrain(slab, pulse)(x, t);
}

}  // namespace squeezeslab

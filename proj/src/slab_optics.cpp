#include "squeezeslab/slab_optics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "squeezeslab/constants.hpp"
#include "squeezeslab/errors.hpp"

namespace squeezeslab {

namespace {

void require_positive_frequency(double omega) {
  if (!(omega > 0.0)) throw DomainError("angular frequency must be positive");
}

}  // namespace

DielectricModel DielectricModel::constant(double eta, double kappa) {
  if (!(eta > 0.0)) throw DomainError("refractive index eta must be positive");
  if (!(kappa >= 0.0)) throw DomainError("extinction coefficient kappa must be >= 0");
  return DielectricModel(ConstantIndex{eta, kappa});
}

DielectricModel DielectricModel::lorentz(double omega0, double plasma, double gamma) {
  if (!(omega0 > 0.0)) throw DomainError("Lorentz resonance frequency must be positive");
  if (!(plasma >= 0.0)) throw DomainError("Lorentz plasma frequency must be >= 0");
  if (!(gamma >= 0.0)) throw DomainError("Lorentz damping must be >= 0 (passive medium)");
  return DielectricModel(LorentzOscillator{omega0, plasma, gamma});
}

const ConstantIndex& DielectricModel::constant_index() const {
  if (const auto* p = std::get_if<ConstantIndex>(&params_)) return *p;
  throw DomainError("operation requires a constant-index dielectric model");
}

complex DielectricModel::permittivity(double omega) const {
  if (const auto* p = std::get_if<ConstantIndex>(&params_)) {
    const complex n{p->eta, p->kappa};
    return n * n;
  }
  const auto& lz = std::get<LorentzOscillator>(params_);
  const complex denom{lz.omega0 * lz.omega0 - omega * omega, -lz.gamma * omega};
  return 1.0 + lz.plasma * lz.plasma / denom;
}

void validate(const SlabSpec& slab) {
  if (!(slab.half_thickness >= 0.0)) throw DomainError("half-thickness l must be >= 0");
  if (!(slab.sigma > 0.0)) throw DomainError("quantization area sigma must be positive");
  if (!(slab.temperature >= 0.0)) throw DomainError("temperature must be >= 0");
}

SlabSpec with_half_thickness(const SlabSpec& slab, double l) {
  SlabSpec out = slab;
  out.half_thickness = l;
  return out;
}

const char* to_string(Channel channel) {
  return channel == Channel::transmitted ? "T" : "R";
}

complex refractive_index(const DielectricModel& model, double omega) {
  require_positive_frequency(omega);
  if (model.is_constant()) {
    const auto& p = model.constant_index();
    return {p.eta, p.kappa};
  }
  complex eps = model.permittivity(omega);
  eps = {eps.real(), eps.imag() + 0.0};  // fold -0 onto the upper lip of the branch cut
  complex n = std::sqrt(eps);
  if (n.real() < 0.0) n = -n;
  return n;
}

ScatterCoefficients scatter_coefficients(const SlabSpec& slab, double omega) {
  validate(slab);
  const complex n = refractive_index(slab.model, omega);
  const double l = slab.half_thickness;
  const double k0 = omega / constants::c;

  // exp(4i w n l / c) split so the decaying factor never overflows.
  const double phase = 4.0 * k0 * l;
  const complex round_trip = std::polar(std::exp(-phase * n.imag()), phase * n.real());
  const complex denom = (n + 1.0) * (n + 1.0) - (n - 1.0) * (n - 1.0) * round_trip;
  if (std::abs(denom) < 1e-14) {
    std::ostringstream msg;
    msg << "slab scattering denominator vanishes at omega=" << omega << ", l=" << l;
    throw SingularityError(msg.str());
  }

  const complex r_s = (n * n - 1.0) * std::polar(1.0, -2.0 * k0 * l) * (round_trip - 1.0) / denom;
  const complex t_prop =
      std::polar(std::exp(-2.0 * k0 * l * n.imag()), 2.0 * k0 * l * (n.real() - 1.0));
  const complex t_s = 4.0 * n * t_prop / denom;

  ScatterCoefficients out;
  out.omega = omega;
  out.r_s = r_s;
  out.t_s = t_s;
  out.abs_r = std::abs(r_s);
  out.abs_t = std::abs(t_s);
  // arg in (-pi, pi] so arg/2 is already the principal half-phase.
  out.delta_r = 0.5 * std::arg(r_s);
  out.delta_t = 0.5 * std::arg(t_s);
  // a real index cannot absorb; skip the rounding residue of 1 - |R|^2 - |T|^2
  out.absorptance = n.imag() == 0.0 ? 0.0
                                    : std::clamp(1.0 - out.abs_r * out.abs_r -
                                                     out.abs_t * out.abs_t,
                                                 0.0, 1.0);
  return out;
}

complex homogeneous_limit(const SlabSpec& slab, double omega) {
  validate(slab);
  const complex n = refractive_index(slab.model, omega);
  const double phase = 2.0 * omega * slab.half_thickness / constants::c;
  return std::polar(std::exp(-phase * n.imag()), phase * n.real());
}

double thermal_occupation(double omega, double temperature) {
  require_positive_frequency(omega);
  if (!(temperature >= 0.0)) throw DomainError("temperature must be >= 0");
  if (temperature == 0.0) return 0.0;
  const double x = constants::hbar * omega / (constants::k_B * temperature);
  return 1.0 / std::expm1(x);
}

double noise_moment(const SlabSpec& slab, double omega) {
  const double n_bar = thermal_occupation(omega, slab.temperature);
  if (n_bar == 0.0) return 0.0;
  return n_bar * scatter_coefficients(slab, omega).absorptance;
}

void unwrap_half_phases(std::span<double> half_phases) {
  for (std::size_t i = 1; i < half_phases.size(); ++i) {
    const double jump = half_phases[i] - half_phases[i - 1];
    half_phases[i] -= constants::pi * std::round(jump / constants::pi);
  }
}

}  // namespace squeezeslab

#pragma once

#include <complex>
#include <span>
#include <variant>

namespace squeezeslab {

using complex = std::complex<double>;

/// Frequency-independent refractive index n = eta + i kappa.
struct ConstantIndex {
  double eta;
  double kappa;
};

/// Single Lorentz oscillator: eps(w) = 1 + plasma^2 / (omega0^2 - w^2 - i gamma w).
struct LorentzOscillator {
  double omega0;
  double plasma;
  double gamma;
};

/// Dielectric response of the slab material. Construct through the factories,
/// which enforce passivity (kappa >= 0, gamma >= 0).
class DielectricModel {
 public:
  static DielectricModel constant(double eta, double kappa);
  static DielectricModel lorentz(double omega0, double plasma, double gamma);

  complex permittivity(double omega) const;

  bool is_constant() const { return std::holds_alternative<ConstantIndex>(params_); }
  /// Throws DomainError for a Lorentz model.
  const ConstantIndex& constant_index() const;
  const std::variant<ConstantIndex, LorentzOscillator>& params() const { return params_; }

 private:
  explicit DielectricModel(std::variant<ConstantIndex, LorentzOscillator> p) : params_(p) {}
  std::variant<ConstantIndex, LorentzOscillator> params_;
};

/// Slab of thickness 2l between x = -l and x = +l.
struct SlabSpec {
  double half_thickness;  // l, m
  DielectricModel model;
  double sigma = 1e-6;       // quantization area, m^2
  double temperature = 0.0;  // K
};

/// Throws DomainError when l < 0, sigma <= 0 or T < 0.
void validate(const SlabSpec& slab);

/// Copy of `slab` with a different half-thickness.
SlabSpec with_half_thickness(const SlabSpec& slab, double l);

enum class Channel { transmitted, reflected };

const char* to_string(Channel channel);

struct ScatterCoefficients {
  double omega;
  complex r_s;
  complex t_s;
  double abs_r;
  double abs_t;
  double delta_r;  // half-phase, r_s = |r_s| exp(2i delta_r), in (-pi/2, pi/2]
  double delta_t;
  double absorptance;

  complex coefficient(Channel ch) const { return ch == Channel::transmitted ? t_s : r_s; }
  double magnitude(Channel ch) const { return ch == Channel::transmitted ? abs_t : abs_r; }
  double half_phase(Channel ch) const { return ch == Channel::transmitted ? delta_t : delta_r; }
};

/// Principal root with Re n > 0 (and Im n >= 0 for passive media).
complex refractive_index(const DielectricModel& model, double omega);

ScatterCoefficients scatter_coefficients(const SlabSpec& slab, double omega);

/// Transmission through 2l of bulk material with the interfaces removed.
complex homogeneous_limit(const SlabSpec& slab, double omega);

/// Bose-Einstein occupation; exactly 0 at T = 0.
double thermal_occupation(double omega, double temperature);

/// <F^dagger F> = n_bar(omega, T) * A(omega), identical for both output ports.
double noise_moment(const SlabSpec& slab, double omega);

/// Continuity-based unwrapping of a sequence of half-phases (period pi).
void unwrap_half_phases(std::span<double> half_phases);

}  // namespace squeezeslab

#pragma once

#include <complex>
#include <optional>

#include "squeezeslab/quadrature.hpp"
#include "squeezeslab/slab_optics.hpp"

namespace squeezeslab {

/// Gaussian continuum squeezed pulse centred on omega_c:
///   rho(w)   = rho_peak exp[-L^2 (w - w_c)^2 / 4c^2]
///   alpha(w) = alpha0 exp(i phi) exp[-L^2 (w - w_c)^2 / 4c^2]
/// An empty alpha0 selects the squeezed-vacuum spectral mode (|alpha(w)| -> 1,
/// squeezed quadrature), used for the narrow-band squeezing analysis.
struct GaussianPulseSpec {
  double omega_c;
  double length;    // L_I, rms spatial length, m
  double rho_peak;  // rho_I
  std::optional<std::complex<double>> alpha0;
  double theta = 0.0;
  double phi = 0.0;
};

/// Throws DomainError unless L > 0, rho_peak >= 0 and c/L < omega_c/20.
void validate(const GaussianPulseSpec& pulse);

enum class SqueezeProfile { gaussian, parabolic };

/// rho_I(omega); the parabolic profile is the second-order expansion of the Gaussian.
double incident_squeeze(const GaussianPulseSpec& pulse, double omega,
                        SqueezeProfile profile = SqueezeProfile::gaussian);

/// Coherent amplitude alpha(omega). Zero in squeezed-vacuum mode.
std::complex<double> incident_amplitude(const GaussianPulseSpec& pulse, double omega);

/// hbar omega / (2 eps0 c sigma).
double spectral_prefactor(double omega, double sigma);

double incident_spectrum(const GaussianPulseSpec& pulse, double sigma, double omega,
                         SqueezeProfile profile = SqueezeProfile::gaussian);

/// |C(omega)|^2 S_I(omega) plus the thermal term prefactor * n_bar * A.
double scattered_spectrum_exact(const SlabSpec& slab, const GaussianPulseSpec& pulse,
                                double omega, Channel channel,
                                SqueezeProfile profile = SqueezeProfile::gaussian);

/// Quadrature band omega_c +- half_width * c/L, one Gauss-Legendre panel per c/L.
struct BandOptions {
  int nodes_per_panel = 64;
  int half_width = 8;  // in units of c/L
};

numerics::QuadratureRule pulse_band_rule(const GaussianPulseSpec& pulse,
                                         const BandOptions& options = {});

/// Second-order expansion C(w) = C(w_c) exp[2i gamma l (w - w_c) - 8 beta^2 l^2 (w - w_c)^2]
/// with k' = n_c / c.
struct NarrowbandCoefficients {
  Channel channel;
  std::complex<double> c_at_center;
  std::complex<double> gamma;    // s/m
  std::complex<double> beta_sq;  // s^2/m^2
};

/// Constant-index model only. The reflected expansion is singular where
/// exp(4i w_c n_c l / c) = 1 (SingularityError).
NarrowbandCoefficients narrowband_coefficients(const SlabSpec& slab, double omega_c,
                                               Channel channel);

/// Validity thresholds for the narrow-band output parameters.
struct NarrowbandOptions {
  double length_factor = 10.0;     // require L_I > length_factor * 2 l eta_c
  double denominator_rel = 1e-3;   // require |p - b| >= denominator_rel * p
};

/// Output squeezed-pulse descriptors of one channel.
struct PulseParams {
  Channel channel;
  double delta_omega;  // rad/s, peak sits at omega_c - delta_omega
  double length_sq;    // L_G^2, m^2
  double rho_gamma;
  double rho_eff;
  bool valid;
};

PulseParams output_pulse_params(const SlabSpec& slab, const GaussianPulseSpec& pulse,
                                Channel channel, const NarrowbandOptions& options = {});

/// rho_G(omega) = rho_G [1 - L_G^2 (omega - omega_c + delta_omega)^2 / 4c^2].
double squeezing_spectrum(const PulseParams& params, const GaussianPulseSpec& pulse,
                          double omega);

/// Narrow-band form of the scattered squeezed-vacuum spectrum,
/// prefactor * exp(-2 rho_G(omega)).
double narrowband_scattered_spectrum(const PulseParams& params, const GaussianPulseSpec& pulse,
                                     double sigma, double omega);

/// (1/4){1 - |C(w_c)|^2 (1 - e^{-2 rho_I}) + 2 <F^dagger F>} for the optimally
/// detected quadrature of a squeezed-vacuum pulse.
double continuum_quadrature_variance(const SlabSpec& slab, const GaussianPulseSpec& pulse,
                                     Channel channel);

/// Energy-weighted fraction int |C|^2 S_I / int S_I over the pulse band.
double energy_weighted_fraction(const SlabSpec& slab, const GaussianPulseSpec& pulse,
                                Channel channel, const BandOptions& options = {});

}  // namespace squeezeslab

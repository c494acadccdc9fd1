#pragma once

#include <span>
#include <vector>

#include "squeezeslab/continuum.hpp"
#include "squeezeslab/kernels.hpp"
#include "squeezeslab/slab_optics.hpp"

namespace squeezeslab {

/// Normal-ordered Poynting vector of one output channel at (x, t), W/m^2.
struct PoyntingSample {
  double x;
  double t;
  double coherent;
  double squeezed;
  double thermal;
  double total;
};

/// Coherent field of a scattered Gaussian pulse, precomputed on the pulse band.
/// intensity(tau) = (hbar / 4 pi sigma) |int dw sqrt(w) C(w) alpha(w) e^{-i w tau}|^2
/// with tau = t - x/c. Each evaluation is done on the band rule and on a rule with
/// twice the nodes per panel; a change larger than rel_tol times the peak bound
/// (hbar / 4 pi sigma)(int |sqrt(w) C alpha|)^2 raises AccuracyError.
class CoherentField {
 public:
  CoherentField(const SlabSpec& slab, const GaussianPulseSpec& pulse, Channel channel,
                const BandOptions& band = {}, double rel_tol = 1e-6);

  double intensity(double tau) const;
  /// Same quantity on the finer rule only, without the doubling check.
  double intensity_fine(double tau) const;

  std::vector<double> intensity_trace(std::span<const double> taus, kernels::Exec exec) const;

  double peak_bound() const { return peak_bound_; }

 private:
  struct Nodes {
    std::vector<double> offset;                  // omega_k - omega_c
    std::vector<std::complex<double>> weighted;  // w_k sqrt(omega_k) C(omega_k) alpha(omega_k)
  };
  static double power(const Nodes& nodes, double tau);

  Nodes coarse_;
  Nodes fine_;
  double prefactor_;
  double peak_bound_;
  double rel_tol_;
};

double coherent_poynting(const SlabSpec& slab, const GaussianPulseSpec& pulse, double x, double t,
                         Channel channel);

/// (hbar / 4 pi sigma) int dw w |C|^2 sinh^2(rho_I(w)); time independent.
double squeezed_flux(const SlabSpec& slab, const GaussianPulseSpec& pulse, Channel channel,
                     const BandOptions& band = {});

/// (hbar / 4 pi sigma) int dw w n_bar(w, T) A(w) over the pulse band; zero at T = 0.
double thermal_flux(const SlabSpec& slab, const GaussianPulseSpec& pulse, Channel channel,
                    const BandOptions& band = {});

PoyntingSample poynting_sample(const SlabSpec& slab, const GaussianPulseSpec& pulse, double x,
                               double t, Channel channel);

/// Peak of the free-space coherent envelope (S0).
double peak_incident_intensity(const GaussianPulseSpec& pulse, double sigma);

struct ParsevalResult {
  double lhs;  // int dt <:S:>_coh at fixed x, J/m^2
  double rhs;  // eps0 c int dw S_coh(w)
  double rel_err;
};

struct ParsevalOptions {
  double x = 0.0;
  std::size_t samples = 8193;
  kernels::Exec exec = kernels::Exec::parallel;
};

/// Time integral of the coherent Poynting vector against the coherent part of the
/// scattered spectrum, |C|^2 (hbar w / 2 eps0 c sigma) |alpha|^2. Requires T = 0.
ParsevalResult parseval_check(const SlabSpec& slab, const GaussianPulseSpec& pulse,
                              Channel channel, const ParsevalOptions& options = {});

/// Narrow-band coherent envelope S0 * amplitude * exp[-2 (x - ct + shift_x)^2 / length_sq].
struct EnvelopeParams {
  Channel channel;
  double amplitude;
  double shift_x;    // m
  double length_sq;  // m^2
};

EnvelopeParams narrowband_envelope(const SlabSpec& slab, const GaussianPulseSpec& pulse,
                                   Channel channel);

double envelope_intensity(const EnvelopeParams& env, double s0, double x, double t);

/// Short-pulse transmitted train built from normal-incidence single-interface
/// factors r = (n-1)/(n+1), t1 = 2/(n+1), t2 = 2n/(n+1).
class PulseTrain {
 public:
  PulseTrain(const SlabSpec& slab, const GaussianPulseSpec& pulse);

  double operator()(double x, double t) const;

  double peak_intensity() const { return s0_; }
  /// Delay of echo m, Delta x_m = -2l[1 - (2m+1) eta_c].
  double echo_shift(std::size_t m) const;
  std::size_t echo_count() const { return weights_.size(); }

 private:
  double s0_;
  double length_;
  double half_thickness_;
  double eta_;
  std::vector<double> weights_;  // S0 |t1 t2|^2 exp(-4 kappa w l / c) |r|^{4m}
};

double pulse_train(const SlabSpec& slab, const GaussianPulseSpec& pulse, double x, double t);

}  // namespace squeezeslab

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "squeezeslab/constants.hpp"
#include "squeezeslab/errors.hpp"
#include "squeezeslab/numerics.hpp"
#include "squeezeslab/poynting.hpp"

using namespace squeezeslab;
using constants::c;
using constants::hbar;
using std::numbers::pi;

namespace {

const double w633 = angular_frequency(633e-9);
const double sigma = 1e-6;

SlabSpec slab(double eta, double kappa, double l, double temp = 0.0) {
  return SlabSpec{l, DielectricModel::constant(eta, kappa), sigma, temp};
}

GaussianPulseSpec pulse(double length = 80e-6, double rho = 1.5) {
  return GaussianPulseSpec{w633, length, rho, std::complex<double>(1.0, 0.0)};
}

// Free-space coherent intensity by a plain trapezoid sum over +-12 c/L.
double free_space_oracle(const GaussianPulseSpec& p, double tau) {
  const double half = 8 * c / p.length;
  auto f = [&](double w) {
    const double x = p.length * (w - p.omega_c) / (2 * c);
    return std::sqrt(w) * std::exp(-x * x) * std::exp(std::complex<double>(0.0, -(w - p.omega_c) * tau));
  };
  const auto integral = oracle::trapezoid(f, p.omega_c - half, p.omega_c + half, 20000);
  return hbar / (4 * pi * sigma) * std::norm(integral);
}

}  // namespace

TEST_CASE("empty slab transmits the free-space pulse and reflects nothing") {
  const auto p = pulse();
  const CoherentField t(slab(1.5, 0.002, 0.0), p, Channel::transmitted);
  const CoherentField r(slab(1.5, 0.002, 0.0), p, Channel::reflected);
  const double peak = free_space_oracle(p, 0.0);
  for (double s : {-2.0, -0.7, 0.0, 0.3, 1.1, 2.5}) {
    const double tau = s * p.length / c;
    CHECK(std::abs(t.intensity(tau) - free_space_oracle(p, tau)) < 1e-9 * peak);
    CHECK(r.intensity(tau) == 0.0);
  }
  CHECK(peak_incident_intensity(p, sigma) >= peak * (1 - 1e-12));
  CHECK(peak_incident_intensity(p, sigma) == doctest::Approx(peak).epsilon(1e-6));
  // Gaussian envelope exp(-2 (ct - x)^2 / L^2) up to the slow sqrt(w) factor
  const double ratio = t.intensity(0.5 * p.length / c) / t.intensity(0.0);
  CHECK(ratio == doctest::Approx(std::exp(-0.5)).epsilon(1e-3));
}

TEST_CASE("long pulses follow the narrow-band envelope") {
  const auto p = pulse();
  const double s0 = peak_incident_intensity(p, sigma);
  for (Channel ch : {Channel::transmitted, Channel::reflected}) {
    const auto s = slab(1.5, 0.002, 1e-6);
    const CoherentField field(s, p, ch);
    const auto env = narrowband_envelope(s, p, ch);
    double worst = 0.0, peak = 0.0;
    for (int i = -300; i <= 300; ++i) {
      const double ct = env.shift_x + i * 0.01 * p.length;
      const double direct = field.intensity(ct / c);
      peak = std::max(peak, direct);
      worst = std::max(worst, std::abs(direct - envelope_intensity(env, s0, 0.0, ct / c)));
    }
    CHECK(worst < 0.02 * peak);
  }
}

TEST_CASE("narrow-band envelope of a vanishing slab is the incident pulse") {
  const auto p = pulse();
  const auto env = narrowband_envelope(slab(1.5, 0.002, 1e-12), p, Channel::transmitted);
  CHECK(std::abs(env.shift_x) < 10 * 1e-12);
  CHECK(env.length_sq == doctest::Approx(p.length * p.length).epsilon(1e-9));
  CHECK(env.amplitude == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("transmitted envelope is delayed, consistent with the direct peak") {
  const double l = 100 * 633e-9 / 6;  // lossless resonance
  const auto p = pulse(1000e-6);
  const auto s = slab(1.5, 0.0, l);
  const auto env = narrowband_envelope(s, p, Channel::transmitted);
  CHECK(env.shift_x > 0.0);
  CHECK(env.shift_x > 2 * l * 0.5);
  const CoherentField field(s, p, Channel::transmitted);
  const double ct_peak = c * numerics::golden_section(
                                 [&](double tau) { return field.intensity_fine(tau); },
                                 -p.length / c, p.length / c, 1e-9 * p.length / c,
                                 numerics::ExtremumKind::maximum);
  CHECK(std::abs(ct_peak - env.shift_x) < 1e-3 * p.length);
}

TEST_CASE("squeezed flux") {
  const auto s = slab(1.5, 0.002, 1e-6);
  CHECK(squeezed_flux(s, pulse(80e-6, 0.0), Channel::transmitted) == 0.0);
  double last = 0.0;
  for (double rho : {0.2, 0.5, 1.0, 1.5}) {
    const double f = squeezed_flux(s, pulse(80e-6, rho), Channel::transmitted);
    CHECK(f > last);
    last = f;
  }
  const auto p = pulse();
  const double half = 8 * c / p.length;
  const double expected =
      hbar / (4 * pi * sigma) *
      oracle::trapezoid(
          [&](double w) {
            const double sh = std::sinh(incident_squeeze(p, w));
            return w * sh * sh;
          },
          w633 - half, w633 + half, 200000);
  CHECK(squeezed_flux(slab(1.5, 0.002, 0.0), p, Channel::transmitted) ==
        doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("thermal flux") {
  const auto p = pulse();
  CHECK(thermal_flux(slab(1.5, 0.01, 1e-6), p, Channel::transmitted) == 0.0);
  CHECK(thermal_flux(slab(1.5, 0.0, 1e-6, 3000.0), p, Channel::transmitted) == 0.0);
  CHECK(thermal_flux(slab(1.5, 0.01, 1e-6, 3000.0), p, Channel::transmitted) > 0.0);
  const auto sample = poynting_sample(slab(1.5, 0.01, 1e-6, 3000.0), p, 0.0, 0.0,
                                      Channel::transmitted);
  CHECK(sample.total == sample.coherent + sample.squeezed + sample.thermal);
}

TEST_CASE("Parseval") {
  const auto p = pulse();
  const auto free_t = parseval_check(slab(1.5, 0.002, 0.0), p, Channel::transmitted);
  CHECK(free_t.rel_err < 1e-9);
  const double half = 8 * c / p.length;
  const double energy =
      constants::epsilon0 * c *
      oracle::trapezoid(
          [&](double w) {
            return spectral_prefactor(w, sigma) * std::norm(incident_amplitude(p, w));
          },
          w633 - half, w633 + half, 20000);
  CHECK(free_t.rhs == doctest::Approx(energy).epsilon(1e-9));

  const auto free_r = parseval_check(slab(1.5, 0.002, 0.0), p, Channel::reflected);
  CHECK(free_r.lhs == 0.0);
  CHECK(free_r.rhs == 0.0);

  for (Channel ch : {Channel::transmitted, Channel::reflected}) {
    CHECK(parseval_check(slab(1.5, 0.002, 1e-6), p, ch).rel_err < 1e-3);
  }
  CHECK_THROWS_AS(parseval_check(slab(1.5, 0.002, 1e-6, 300.0), p, Channel::transmitted),
                  DomainError);
}

TEST_CASE("pulse train echoes") {
  const double l = 10e-6;
  const auto p = pulse(3e-6);
  const PulseTrain train(slab(1.5, 0.0, l), p);
  for (std::size_t m = 0; m + 1 < train.echo_count(); ++m) {
    CHECK(train.echo_shift(m + 1) - train.echo_shift(m) == doctest::Approx(4 * l * 1.5));
  }
  CHECK(train.echo_shift(0) == doctest::Approx(2 * l * 0.5));
  const double first = train(0.0, train.echo_shift(0) / c);
  const double second = train(0.0, train.echo_shift(1) / c);
  CHECK(second / first == doctest::Approx(std::pow(0.2, 4)).epsilon(1e-9));
  CHECK(first / train.peak_intensity() == doctest::Approx(std::pow(4 * 1.5 / 6.25, 2)).epsilon(1e-9));
}

TEST_CASE("pulse train matches direct synthesis") {
  const double l = 10e-6, eta = 1.5;
  const auto p = pulse(2 * l * eta / 10);
  const auto s = slab(eta, 0.002, l);
  const PulseTrain train(s, p);
  const CoherentField field(s, p, Channel::transmitted);
  double sum = 0.0, peak = 0.0;
  int count = 0;
  for (double ct = train.echo_shift(0) - 5 * p.length; ct < train.echo_shift(3) + 5 * p.length;
       ct += 0.02 * p.length) {
    const double direct = field.intensity(ct / c);
    sum += std::pow(train(0.0, ct / c) - direct, 2);
    peak = std::max(peak, direct);
    ++count;
  }
  CHECK(std::sqrt(sum / count) < 0.05 * peak);
}

TEST_CASE("regime and accuracy guards") {
  CHECK_THROWS_AS(PulseTrain(slab(1.5, 0.002, 1e-6), pulse()), RegimeError);
  CHECK_THROWS_AS(narrowband_envelope(slab(1.5, 0.002, 10e-6), pulse(3e-6), Channel::transmitted),
                  RegimeError);
  GaussianPulseSpec dark = pulse();
  dark.alpha0.reset();
  CHECK_THROWS_AS(CoherentField(slab(1.5, 0.0, 1e-6), dark, Channel::transmitted), DomainError);

  const CoherentField coarse(slab(1.5, 0.0, 2e-3), pulse(), Channel::transmitted, BandOptions{2, 8});
  CHECK_THROWS_AS(coarse.intensity(0.0), AccuracyError);
}

TEST_CASE("time-integrated energy balance") {
  const auto p = pulse();
  const auto incident = parseval_check(slab(1.5, 0.0, 0.0), p, Channel::transmitted).lhs;
  const auto lossless = slab(1.7, 0.0, 1.3e-6);
  const double out = parseval_check(lossless, p, Channel::transmitted).lhs +
                     parseval_check(lossless, p, Channel::reflected).lhs;
  CHECK(out == doctest::Approx(incident).epsilon(1e-3));

  const auto lossy = slab(1.7, 0.01, 1.3e-6);
  const double kept = parseval_check(lossy, p, Channel::transmitted).lhs +
                      parseval_check(lossy, p, Channel::reflected).lhs;
  CHECK(kept < incident);
  const double half = 8 * c / p.length;
  const double absorbed =
      constants::epsilon0 * c *
      oracle::trapezoid(
          [&](double w) {
            return scatter_coefficients(lossy, w).absorptance * spectral_prefactor(w, sigma) *
                   std::norm(incident_amplitude(p, w));
          },
          w633 - half, w633 + half, 20000);
  CHECK(incident - kept == doctest::Approx(absorbed).epsilon(1e-3));
}

TEST_CASE("coherent flux depends on t - x/c only") {
  const auto s = slab(1.5, 0.002, 1e-6);
  const auto p = pulse();
  const double t = 0.3 * p.length / c;
  const double base = coherent_poynting(s, p, 0.0, t, Channel::transmitted);
  for (double x : {5e-6, 40e-6, 1e-3}) {
    CHECK(coherent_poynting(s, p, x, t + x / c, Channel::transmitted) ==
          doctest::Approx(base).epsilon(1e-9));
  }
}

TEST_CASE("envelope peak sits at the direct-integral maximum") {
  const auto p = pulse();
  for (double eta : {1.2, 1.5, 2.3}) {
    for (Channel ch : {Channel::transmitted, Channel::reflected}) {
      const auto s = slab(eta, 0.002, 1e-6);
      const auto env = narrowband_envelope(s, p, ch);
      const CoherentField field(s, p, ch);
      const double ct_peak =
          c * numerics::golden_section([&](double tau) { return field.intensity_fine(tau); },
                                       (env.shift_x - p.length) / c, (env.shift_x + p.length) / c,
                                       1e-6 * p.length / c, numerics::ExtremumKind::maximum);
      CHECK(std::abs(ct_peak - env.shift_x) < p.length / 50);
    }
  }
}

TEST_CASE("flux components are non-negative") {
  const auto p = pulse();
  const auto s = slab(1.5, 0.01, 1e-6, 800.0);
  for (double ct : {-100e-6, 0.0, 50e-6}) {
    for (Channel ch : {Channel::transmitted, Channel::reflected}) {
      const auto v = poynting_sample(s, p, 0.0, ct / c, ch);
      CHECK(v.coherent >= 0.0);
      CHECK(v.squeezed >= 0.0);
      CHECK(v.thermal >= 0.0);
    }
  }
}

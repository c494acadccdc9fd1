#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "squeezeslab/constants.hpp"
#include "squeezeslab/errors.hpp"
#include "squeezeslab/slab_optics.hpp"

using namespace squeezeslab;
using std::numbers::pi;

namespace {

const double w1064 = angular_frequency(1064e-9);

SlabSpec slab(double eta, double kappa, double l, double temp = 0.0) {
  return SlabSpec{l, DielectricModel::constant(eta, kappa), 1e-6, temp};
}

}  // namespace

TEST_CASE("constant model returns its parameters") {
  const auto n = refractive_index(DielectricModel::constant(1.5, 0.005), 3e15);
  CHECK(n.real() == 1.5);
  CHECK(n.imag() == 0.005);
  const auto vac = refractive_index(DielectricModel::constant(1.0, 0.0), 1e15);
  CHECK(vac == complex(1.0, 0.0));
}

TEST_CASE("Lorentz model far below resonance is real sqrt(1 + p^2/w0^2)") {
  const double w0 = 5e15, p = 4e15;
  const auto model = DielectricModel::lorentz(w0, p, 0.0);
  const auto n = refractive_index(model, 1e10);
  CHECK(std::abs(n.real() - std::sqrt(1.0 + p * p / (w0 * w0))) < 1e-9);
  CHECK(n.imag() == 0.0);
}

TEST_CASE("Lorentz index is passive and squares to the permittivity") {
  const auto model = DielectricModel::lorentz(3e15, 2e15, 1e14);
  for (double w : {1e15, 2.9e15, 3e15, 3.1e15, 6e15}) {
    const auto n = refractive_index(model, w);
    CHECK(n.real() > 0.0);
    CHECK(n.imag() >= 0.0);
    CHECK(std::abs(n * n - model.permittivity(w)) < 1e-12 * std::abs(model.permittivity(w)));
  }
  CHECK_THROWS_AS(model.constant_index(), DomainError);
}

TEST_CASE("invalid slab parameters are rejected") {
  CHECK_THROWS_AS(DielectricModel::constant(1.5, -0.1), DomainError);
  CHECK_THROWS_AS(DielectricModel::constant(0.0, 0.1), DomainError);
  CHECK_THROWS_AS(scatter_coefficients(slab(1.5, 0.0, -1e-6), w1064), DomainError);
  CHECK_THROWS_AS(scatter_coefficients(slab(1.5, 0.0, 1e-6), -1.0), DomainError);
}

TEST_CASE("empty slab passes everything") {
  const auto sc = scatter_coefficients(slab(1.5, 0.005, 0.0), w1064);
  CHECK(std::abs(sc.t_s - 1.0) < 1e-15);
  CHECK(std::abs(sc.r_s) < 1e-15);
  CHECK(sc.absorptance < 1e-15);
}

TEST_CASE("lossless resonance and anti-resonance") {
  const double lambda = 1064e-9, eta = 1.5;
  const auto res = scatter_coefficients(slab(eta, 0.0, lambda / (4 * eta)), w1064);
  CHECK(std::abs(res.abs_t - 1.0) < 1e-12);
  CHECK(res.abs_r < 1e-12);

  const auto anti = scatter_coefficients(slab(eta, 0.0, lambda / (8 * eta)), w1064);
  CHECK(std::abs(anti.abs_t - 12.0 / 13.0) < 1e-12);
  CHECK(std::abs(anti.abs_r - 5.0 / 13.0) < 1e-12);
}

TEST_CASE("scattering coefficients agree with the characteristic-matrix oracle") {
  auto g = oracle::rng(7);
  for (int i = 0; i < 2000; ++i) {
    const double eta = oracle::uniform(g, 1.0, 3.0);
    const double kappa = oracle::uniform(g, 0.0, 0.05);
    const double w = oracle::uniform(g, 1e15, 4e15);
    const double l = oracle::uniform(g, 0.0, 20e-6);
    const auto sc = scatter_coefficients(slab(eta, kappa, l), w);
    const auto ref = oracle::transfer_matrix({eta, kappa}, w, l);
    CHECK(std::abs(sc.t_s - ref.t) < 1e-10 * std::max(1e-3, std::abs(ref.t)));
    CHECK(std::abs(sc.r_s - ref.r) < 1e-10 * std::max(1e-3, std::abs(ref.r)));
  }
}

TEST_CASE("lossless slabs conserve energy") {
  auto g = oracle::rng(11);
  for (int i = 0; i < 10000; ++i) {
    const double eta = oracle::uniform(g, 1.0, 3.0);
    const double w = oracle::uniform(g, 1e14, 5e15);
    const double l = oracle::uniform(g, 0.0, 100e-6);
    const auto sc = scatter_coefficients(slab(eta, 0.0, l), w);
    CHECK(std::abs(sc.abs_r * sc.abs_r + sc.abs_t * sc.abs_t - 1.0) < 1e-12);
    CHECK(std::abs(sc.abs_t) <= 1.0 + 1e-15);
  }
}

TEST_CASE("homogeneous limit is single-pass absorption") {
  const double l = 10e-6, kappa = 0.005;
  const auto h = homogeneous_limit(slab(1.5, kappa, l), w1064);
  CHECK(std::abs(std::norm(h) - std::exp(-4 * pi * kappa * 2 * l / 1064e-9)) < 1e-14);
  CHECK(std::abs(std::abs(h) - std::exp(-2 * w1064 * kappa * l / constants::c)) < 1e-14);
}

TEST_CASE("thick absorbing slab is opaque") {
  const auto sc = scatter_coefficients(slab(1.5, 0.005, 1e-3), w1064);
  CHECK(sc.abs_t < 1e-20);
  CHECK(std::abs(sc.abs_r - 0.5 / 2.5) < 1e-4);
}

TEST_CASE("absorptance stays in [0, 1]") {
  auto g = oracle::rng(3);
  for (int i = 0; i < 2000; ++i) {
    const auto sc = scatter_coefficients(
        slab(oracle::uniform(g, 1.0, 3.0), oracle::uniform(g, 0.0, 1.0), oracle::uniform(g, 0, 5e-6)),
        oracle::uniform(g, 1e15, 3e15));
    CHECK(sc.absorptance >= 0.0);
    CHECK(sc.absorptance <= 1.0);
  }
}

TEST_CASE("half phases reproduce the coefficients") {
  const auto sc = scatter_coefficients(slab(2.0, 0.01, 0.37e-6), w1064);
  CHECK(std::abs(std::polar(sc.abs_t, 2 * sc.delta_t) - sc.t_s) < 1e-14);
  CHECK(std::abs(std::polar(sc.abs_r, 2 * sc.delta_r) - sc.r_s) < 1e-14);
}

TEST_CASE("thermal occupation") {
  CHECK(thermal_occupation(w1064, 0.0) == 0.0);
  const double t_ln2 = constants::hbar * w1064 / (constants::k_B * std::log(2.0));
  CHECK(thermal_occupation(w1064, t_ln2) == doctest::Approx(1.0).epsilon(1e-12));
  // hbar w / k_B T at 1064 nm, 300 K
  const double x = 2 * pi * constants::hbar * constants::c / (1064e-9 * constants::k_B * 300.0);
  CHECK(x == doctest::Approx(45.1).epsilon(1e-3));
  CHECK(std::log(thermal_occupation(w1064, 300.0)) == doctest::Approx(-x).epsilon(1e-12));
  CHECK_THROWS_AS(thermal_occupation(w1064, -1.0), DomainError);
}

TEST_CASE("noise moment") {
  CHECK(noise_moment(slab(1.5, 0.005, 5e-6, 0.0), w1064) == 0.0);
  CHECK(noise_moment(slab(1.5, 0.0, 5e-6, 300.0), w1064) < 1e-35);
  const auto s = slab(1.5, 0.005, 5e-6, 300.0);
  const auto sc = scatter_coefficients(s, w1064);
  CHECK(sc.absorptance > 0.0);
  CHECK(sc.absorptance < 1.0);
  CHECK(noise_moment(s, w1064) ==
        doctest::Approx(thermal_occupation(w1064, 300.0) * sc.absorptance).epsilon(1e-14));
}

TEST_CASE("half-phase unwrapping removes pi jumps") {
  std::vector<double> truth, wrapped;
  for (int i = 0; i < 200; ++i) {
    const double v = 0.05 * i;
    truth.push_back(v);
    wrapped.push_back(std::remainder(v, pi));
  }
  unwrap_half_phases(wrapped);
  for (std::size_t i = 0; i < truth.size(); ++i) CHECK(std::abs(wrapped[i] - truth[i]) < 1e-12);
}

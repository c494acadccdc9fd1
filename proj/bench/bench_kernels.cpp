// Serial reference vs OpenMP paths of the grid kernels. Argument 0 is serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "squeezeslab/constants.hpp"
#include "squeezeslab/kernels.hpp"
#include "squeezeslab/poynting.hpp"
#include "squeezeslab/single_mode.hpp"

using namespace squeezeslab;
using kernels::Exec;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

SlabSpec fig_slab() { return SlabSpec{1e-6, DielectricModel::constant(1.5, 0.002), 1e-6, 0.0}; }

GaussianPulseSpec fig_pulse() {
  return GaussianPulseSpec{angular_frequency(633e-9), 80e-6, 1.5, std::complex<double>(1.0, 0.0)};
}

void variance_sweep(benchmark::State& state) {
  const auto ls = kernels::linspace(2e-9, 2e-5, 10000);
  const auto base = SlabSpec{0.0, DielectricModel::constant(1.5, 0.005), 1e-6, 0.0};
  const double w = angular_frequency(1064e-9);
  for (auto _ : state) {
    auto out = kernels::map_grid(
        ls, [&](double l) { return transmitted_variances(with_half_thickness(base, l), w, {0.8, 0.0, {}}).var_x; },
        exec_of(state));
    benchmark::DoNotOptimize(out.data());
  }
}

void coherent_trace(benchmark::State& state) {
  const auto pulse = fig_pulse();
  const CoherentField field(fig_slab(), pulse, Channel::transmitted);
  const auto taus = kernels::linspace(-10 * pulse.length / constants::c, 10 * pulse.length / constants::c, 256);
  for (auto _ : state) {
    auto out = field.intensity_trace(taus, exec_of(state));
    benchmark::DoNotOptimize(out.data());
  }
}

void parseval(benchmark::State& state) {
  ParsevalOptions opts;
  opts.exec = exec_of(state);
  for (auto _ : state) {
    auto r = parseval_check(fig_slab(), fig_pulse(), Channel::transmitted, opts);
    benchmark::DoNotOptimize(r.rel_err);
  }
}

}  // namespace

BENCHMARK(variance_sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(coherent_trace)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(parseval)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();

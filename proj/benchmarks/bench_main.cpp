#include <benchmark/benchmark.h>

#include "ballspec/ballgrid.hpp"
#include "ballspec/eigenbasis.hpp"
#include "ballspec/harmonics.hpp"
#include "ballspec/solver.hpp"
#include "ballspec/spectral.hpp"
#include "ballspec/specfun.hpp"

namespace {

using namespace ballspec;

void BM_Psi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double z = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi(n, z));
    z = z < 100.0 ? z + 0.37 : 0.1;
  }
}
BENCHMARK(BM_Psi)->Arg(1)->Arg(8)->Arg(32)->Arg(64);

void BM_ZeroTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_zero_table(ZeroFamily::curl, n, n, 1.0));
    benchmark::DoNotOptimize(build_zero_table(ZeroFamily::graddiv, n, n, 1.0));
  }
}
BENCHMARK(BM_ZeroTable)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_HarmonicTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(HarmonicTable(n, 0.3, std::sqrt(0.91), 1.2));
}
BENCHMARK(BM_HarmonicTable)->Arg(4)->Arg(16)->Arg(64);

void BM_EvaluateAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto basis = make_basis(kAllFamilies, n, 3, 1.0);
  std::vector<Vec3> out(basis->size());
  const Vec3 x{0.2, -0.3, 0.5};
  for (auto _ : state) {
    basis->evaluate_all(x, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["modes"] = static_cast<double>(basis->size());
}
BENCHMARK(BM_EvaluateAll)->Arg(2)->Arg(4)->Arg(8);

void BM_Project(benchmark::State& state) {
  const auto basis = make_basis(kAllFamilies, 4, 3, 1.0);
  const auto grid = build_grid(1.0, 16, 12, 24);
  const auto f = FieldSamples::sample(grid, [](const Vec3& x) { return Vec3{-x.y, x.x, 0.0}; });
  for (auto _ : state) benchmark::DoNotOptimize(project(f, basis));
}
BENCHMARK(BM_Project)->Unit(benchmark::kMillisecond);

void BM_Resolvent(benchmark::State& state) {
  const auto basis = make_basis(kCurlFamilies, 16, 16, 1.0);
  SpectralCoefficients c(basis);
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = 1.0 / static_cast<double>(j + 1);
  for (auto _ : state) benchmark::DoNotOptimize(resolvent_curl(c, 1.0));
  state.counters["modes"] = static_cast<double>(basis->size());
}
BENCHMARK(BM_Resolvent);

}  // namespace

BENCHMARK_MAIN();

// Serial reference vs OpenMP paths of the two data-parallel kernels:
// the shape-profile scan inside modulus() and the comparison-theorem grid.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "kolmo/comparison.hpp"
#include "kolmo/modulus.hpp"

namespace {

std::vector<double> ratio_grid(int n) {
  std::vector<double> xs{0.0};
  for (int i = 0; i < n; ++i) xs.push_back(std::pow(10.0, -4.0 + 10.0 * i / n));
  return xs;
}

void profile(benchmark::State& state, kolmo::Exec exec) {
  const kolmo::OrderVector kk({0, 1, 5, 6});
  const auto spec = kolmo::ClassSpec::box({{5, 2.0}, {6, 1.0}});
  const auto xs = ratio_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto v = kolmo::shape_profile(kk, spec, 1.0, xs, 0.0, exec);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(xs.size()));
}

void comparison(benchmark::State& state, kolmo::Exec exec) {
  const kolmo::OrderVector kk({0, 1, 3, 5});
  const kolmo::RodovParams psi{0.0, 1.0, 0.7, 5, 1.0};
  const auto f = kolmo::TestFunction::spline(kolmo::build_rodov(psi).scaled(0.9));
  for (auto _ : state) {
    auto rep = kolmo::verify_comparison_rodov(f, kk, psi, static_cast<int>(state.range(0)), exec);
    benchmark::DoNotOptimize(rep.max_violation);
  }
}

void BM_ProfileSerial(benchmark::State& s) { profile(s, kolmo::Exec::Serial); }
void BM_ProfileParallel(benchmark::State& s) { profile(s, kolmo::Exec::Parallel); }
void BM_ComparisonSerial(benchmark::State& s) { comparison(s, kolmo::Exec::Serial); }
void BM_ComparisonParallel(benchmark::State& s) { comparison(s, kolmo::Exec::Parallel); }

}  // namespace

BENCHMARK(BM_ProfileSerial)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProfileParallel)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComparisonSerial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComparisonParallel)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

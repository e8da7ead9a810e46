#include <benchmark/benchmark.h>

#include "pwl/builtin_examples.hpp"
#include "pwl/kernels.hpp"
#include "pwl/mapfile.hpp"
#include "pwl/random_map.hpp"

namespace {

const pwl::PwlMap2& bench_map() {
  static const pwl::PwlMap2 g = pwl::random_map(8, 11, false);
  return g;
}

std::vector<pwl::Mat2> clarke_members() {
  std::vector<pwl::Mat2> m;
  for (const auto& p : pwl::parse_map_file(pwl::builtin_example_json("clarke4")).map.pieces())
    m.push_back(p.matrix);
  return m;
}

void BM_ImageCurveSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(pwl::kernels::sample_image_curve_serial(bench_map(), state.range(0)));
}

void BM_ImageCurveParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(pwl::kernels::sample_image_curve(bench_map(), state.range(0)));
}

void BM_WindingSerial(benchmark::State& state) {
  const auto pts = pwl::kernels::sample_image_curve(bench_map(), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pwl::kernels::polyline_winding_serial(pts));
}

void BM_WindingParallel(benchmark::State& state) {
  const auto pts = pwl::kernels::sample_image_curve(bench_map(), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pwl::kernels::polyline_winding(pts));
}

void BM_HullScanSerial(benchmark::State& state) {
  const auto m = clarke_members();
  for (auto _ : state)
    benchmark::DoNotOptimize(pwl::kernels::hull_grid_min_det_serial(m, static_cast<int>(state.range(0))));
}

void BM_HullScanParallel(benchmark::State& state) {
  const auto m = clarke_members();
  for (auto _ : state)
    benchmark::DoNotOptimize(pwl::kernels::hull_grid_min_det(m, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_ImageCurveSerial)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_ImageCurveParallel)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_WindingSerial)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_WindingParallel)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_HullScanSerial)->Arg(50)->Arg(100);
BENCHMARK(BM_HullScanParallel)->Arg(50)->Arg(100);

BENCHMARK_MAIN();

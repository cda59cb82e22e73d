// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "staircase/chains.hpp"
#include "staircase/fibers.hpp"
#include "staircase/hull.hpp"

using namespace staircase;

namespace {

const FiberMatrix& example_matrix() {
  static const FiberMatrix a{{1, 1, 1, 0, 0, 0}, {0, 3, 2, 1, 0, 0}, {5, 0, 2, 0, 1, 0}, {0, 2, 1, 0, 0, 1}};
  return a;
}

std::vector<ExponentVector> wide_fiber() {
  // Compositions of 12 into 3 parts: a triangle with 91 lattice points.
  return fiber_points(FiberMatrix{{1, 1, 1}}, Degree{12});
}

IdealFamily staircase_family(std::int64_t k) {
  std::vector<MonomialIdeal> members;
  for (std::int64_t a = 1; a < k; ++a) {
    for (std::int64_t c = 1; c <= 3; ++c) members.push_back(MonomialIdeal(3, {{a, 0, 0}, {0, k - a, 0}, {0, 0, c}}));
  }
  return IdealFamily(3, std::move(members));
}

void BM_HullVerticesSerial(benchmark::State& state) {
  const auto pts = wide_fiber();
  for (auto _ : state) benchmark::DoNotOptimize(hull_vertices_serial(pts));
}
BENCHMARK(BM_HullVerticesSerial)->Unit(benchmark::kMillisecond);

void BM_HullVerticesParallel(benchmark::State& state) {
  const auto pts = wide_fiber();
  for (auto _ : state) benchmark::DoNotOptimize(hull_vertices(pts, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HullVerticesParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_AtomicScanSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(atomic_scan_serial(example_matrix(), 4));
}
BENCHMARK(BM_AtomicScanSerial)->Unit(benchmark::kMillisecond);

void BM_AtomicScanParallel(benchmark::State& state) {
  ScanOptions opts;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(atomic_scan(example_matrix(), 4, opts));
}
BENCHMARK(BM_AtomicScanParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ContainmentSerial(benchmark::State& state) {
  const auto family = staircase_family(20);
  for (auto _ : state) benchmark::DoNotOptimize(containment_matrix_serial(family));
}
BENCHMARK(BM_ContainmentSerial)->Unit(benchmark::kMillisecond);

void BM_ContainmentParallel(benchmark::State& state) {
  const auto family = staircase_family(20);
  for (auto _ : state) benchmark::DoNotOptimize(containment_matrix(family, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ContainmentParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

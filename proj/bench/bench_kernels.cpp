// Serial reference vs OpenMP kernels. Set OMP_NUM_THREADS to compare.

#include <benchmark/benchmark.h>

#include <random>

#include "periodmap/face_constraints.hpp"
#include "periodmap/kernels.hpp"
#include "periodmap/permutahedron.hpp"
#include "periodmap/presets.hpp"

using namespace periodmap;

namespace {

kernels::ShortVectorProblem problem(std::size_t n, long box) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  std::vector<double> a(n * n);
  for (auto& c : a) c = u(rng);
  kernels::ShortVectorProblem p;
  p.n = n;
  p.M.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) p.M[i * n + j] += a[k * n + i] * a[k * n + j];
      if (i == j) p.M[i * n + j] += 0.05;
    }
  p.box = box;
  p.initial_radius2 = 6.0;
  return p;
}

void BM_ShortVectorsSerial(benchmark::State& st) {
  const auto p = problem(static_cast<std::size_t>(st.range(0)), 6);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::shortest_vectors_serial(p));
}

void BM_ShortVectorsParallel(benchmark::State& st) {
  const auto p = problem(static_cast<std::size_t>(st.range(0)), 6);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::shortest_vectors_parallel(p));
}

std::vector<Vec> images(int K) {
  std::vector<Vec> out;
  for (const auto& g : simplex_grid(2, K)) out.push_back(g);
  return out;
}

void BM_CoverageSerial(benchmark::State& st) {
  const auto grid = simplex_grid(2, 100);
  const auto img = images(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::coverage_serial(grid, img, 0.01));
}

void BM_CoverageParallel(benchmark::State& st) {
  const auto grid = simplex_grid(2, 100);
  const auto img = images(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::coverage_parallel(grid, img, 0.01));
}

std::vector<NestedSequence> all_faces(int n) {
  std::vector<NestedSequence> out;
  for (int c = 1; c <= n; ++c)
    for (auto& f : enumerate_faces(n, c)) out.push_back(f);
  return out;
}

SurfaceConfig rank5() {
  return make_config(make_diagonal_form({1, -1, -1, -1, -1}),
                     {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {3, 1, 1, 1, 1}});
}

void BM_FaceSweepSerial(benchmark::State& st) {
  const SurfaceConfig cfg = rank5();
  const auto faces = all_faces(4);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::face_sweep_serial(cfg, faces));
}

void BM_FaceSweepParallel(benchmark::State& st) {
  const SurfaceConfig cfg = rank5();
  const auto faces = all_faces(4);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::face_sweep_parallel(cfg, faces));
}

}  // namespace

BENCHMARK(BM_ShortVectorsSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShortVectorsParallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverageSerial)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverageParallel)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FaceSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FaceSweepParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include "tropical/lattice.hpp"
#include "tropical/polytope.hpp"
#include "tropical/stable_intersection.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace tropical;

namespace {

RationalPolytope random_polytope(std::mt19937& rng, std::size_t d, std::size_t points, long range) {
  std::uniform_int_distribution<long> u(0, range);
  for (;;) {
    std::vector<RatVector> pts;
    for (std::size_t i = 0; i < points; ++i) {
      RatVector p;
      for (std::size_t j = 0; j < d; ++j) p.emplace_back(u(rng));
      pts.push_back(std::move(p));
    }
    RationalPolytope p(d, pts);
    if (p.dim() == static_cast<int>(d)) return p;
  }
}

void BM_Hnf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> u(-50, 50);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = u(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(m));
}
BENCHMARK(BM_Hnf)->Arg(4)->Arg(8)->Arg(16);

void BM_FaceLattice(benchmark::State& state) {
  std::mt19937 rng(2);
  const auto p = random_polytope(rng, 3, static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(p.polyhedron().face_lattice());
}
BENCHMARK(BM_FaceLattice)->Arg(8)->Arg(16);

void BM_Hypersurface(benchmark::State& state) {
  std::mt19937 rng(3);
  const auto p = random_polytope(rng, 3, static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(tropical_hypersurface(p));
}
BENCHMARK(BM_Hypersurface)->Arg(5)->Arg(8);

void BM_StableIntersection3d(benchmark::State& state) {
  std::mt19937 rng(4);
  const auto x = tropical_hypersurface(random_polytope(rng, 3, 5, 3));
  const auto y = tropical_hypersurface(random_polytope(rng, 3, 5, 3));
  for (auto _ : state) benchmark::DoNotOptimize(stable_intersection(x, y));
}
BENCHMARK(BM_StableIntersection3d);

void BM_Volume(benchmark::State& state) {
  std::mt19937 rng(5);
  const auto p = random_polytope(rng, static_cast<std::size_t>(state.range(0)), 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(normalized_volume(p));
}
BENCHMARK(BM_Volume)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();

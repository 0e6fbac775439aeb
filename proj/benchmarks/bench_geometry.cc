#include <benchmark/benchmark.h>

#include <random>

#include "petruska/constructions/constructions.h"
#include "petruska/constructions/verify.h"
#include "petruska/geometry/convex.h"
#include "petruska/geometry/hole_triangle.h"
#include "petruska/geometry/sampling.h"

namespace {

using namespace petruska;

std::vector<geom::Point> cloud(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-1000, 1000);
  std::vector<geom::Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(geom::make_point(d(rng), d(rng)));
  return pts;
}

void BM_Hull(benchmark::State& state) {
  const auto pts = cloud(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(geom::ConvexBody::hull(pts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hull)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_Feasible(benchmark::State& state) {
  std::vector<geom::ConvexBody> bodies;
  for (int i = 0; i < state.range(0); ++i) bodies.push_back(geom::ConvexBody::hull(cloud(12, 10 + i)));
  std::vector<geom::HalfPlane> h;
  for (const auto& b : bodies) h.insert(h.end(), b.hrep().begin(), b.hrep().end());
  for (auto _ : state) benchmark::DoNotOptimize(geom::feasible(h));
}
BENCHMARK(BM_Feasible)->DenseRange(2, 8, 2);

void BM_Intersection(benchmark::State& state) {
  const auto f = constructions::nine_sets();
  std::vector<const geom::ConvexBody*> five;
  for (int b : {0, 1, 2, 3, 6}) five.push_back(&f.bodies()[b]);
  for (auto _ : state) benchmark::DoNotOptimize(geom::intersection(five));
}
BENCHMARK(BM_Intersection);

void BM_HoleTriangle(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto hole = geom::random_hole(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(geom::hole_triangle(hole.bodies[0], hole.bodies[1], hole.bodies[2]));
  }
}
BENCHMARK(BM_HoleTriangle);

void BM_Nerve(benchmark::State& state) {
  const auto f = constructions::polygon_construction(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(constructions::compute_nerve(f));
}
BENCHMARK(BM_Nerve)->DenseRange(3, 8);

void BM_RegionCoverageNineSets(benchmark::State& state) {
  const auto f = constructions::nine_sets();
  for (auto _ : state) benchmark::DoNotOptimize(constructions::region_coverage(f, 5));
  state.SetLabel("36 pairs");
}
BENCHMARK(BM_RegionCoverageNineSets)->Unit(benchmark::kMillisecond);

}  // namespace

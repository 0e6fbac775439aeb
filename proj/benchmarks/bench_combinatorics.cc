#include <benchmark/benchmark.h>

#include <random>

#include "petruska/enumeration/catalog.h"
#include "petruska/enumeration/enumerate.h"
#include "petruska/redblue/certificate.h"
#include "petruska/redblue/hypergraph.h"

namespace {

using namespace petruska;

rb::Hypergraph3 random_hypergraph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<rb::Triple> t;
  for (std::size_t i = 0; i < rb::choose3(n); ++i)
    if (coin(rng)) t.push_back(rb::Triple::from_index(i));
  return rb::Hypergraph3(n, t);
}

void BM_CanonicalForm(benchmark::State& state) {
  const auto h = random_hypergraph(static_cast<int>(state.range(0)), 0.3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rb::canonical_form(h));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(6, 10, 2);

void BM_Tau(benchmark::State& state) {
  const auto h = random_hypergraph(static_cast<int>(state.range(0)), 0.2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(rb::tau(h));
}
BENCHMARK(BM_Tau)->DenseRange(7, 13, 3);

void BM_Enumerate(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumeration::enumerate_tau3_c3_free(static_cast<int>(state.range(0)), threads));
  }
}
BENCHMARK(BM_Enumerate)->Args({6, 1})->Args({7, 1})->Args({7, 4})->Unit(benchmark::kMillisecond);

void BM_TwoCollapsible(benchmark::State& state) {
  const auto rb = rb::RedBlueClique::from_blue(enumeration::catalog_entry("C7").hypergraph);
  for (auto _ : state) benchmark::DoNotOptimize(rb::is_two_collapsible(rb));
}
BENCHMARK(BM_TwoCollapsible);

void BM_Battery(benchmark::State& state) {
  const auto rb = rb::RedBlueClique::from_blue(enumeration::catalog_entry("D+").hypergraph);
  for (auto _ : state) benchmark::DoNotOptimize(rb::convexity_certificate_battery(rb, 4));
}
BENCHMARK(BM_Battery);

}  // namespace

#include <random>

#include <benchmark/benchmark.h>

#include "rainbow/extremal.hpp"
#include "rainbow/hall.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/shifting.hpp"
#include "rainbow/verify.hpp"

namespace {

using namespace rainbow;

Hypergraph random_hypergraph(const GroundSet& g, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  std::vector<Edge> edges;
  for (const Edge& e : g.universe()) {
    if (keep(rng)) edges.push_back(e);
  }
  return Hypergraph(g, std::move(edges));
}

Family random_family(const GroundSet& g, std::size_t k, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Hypergraph> members;
  for (std::size_t i = 0; i < k; ++i) members.push_back(random_hypergraph(g, density, rng));
  return Family(g, std::move(members));
}

void BM_NuExactBipartite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  const Hypergraph h = random_hypergraph(GroundSet::partite(2, n), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(nu_exact(h));
}
BENCHMARK(BM_NuExactBipartite)->DenseRange(4, 12, 4);

void BM_NuExactThreePartite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(11);
  const Hypergraph h = random_hypergraph(GroundSet::partite(3, n), 0.2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(nu_exact(h));
}
BENCHMARK(BM_NuExactThreePartite)->DenseRange(3, 6, 1);

void BM_RainbowExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Family f = random_family(GroundSet::partite(2, n), static_cast<std::size_t>(n), 0.4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rainbow_exact(f));
}
BENCHMARK(BM_RainbowExact)->DenseRange(4, 8, 2);

void BM_RainbowExactStarNone(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Family f = star_family(n, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rainbow_exact(f));
}
BENCHMARK(BM_RainbowExactStarNone)->DenseRange(4, 8, 2);

void BM_ShiftedClosure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Family f = random_family(GroundSet::partite(2, n), 3, 0.5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(shifted_closure(f));
}
BENCHMARK(BM_ShiftedClosure)->DenseRange(4, 10, 3);

void BM_EnumerateShifted(benchmark::State& state) {
  const GroundSet g = GroundSet::partite(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::size_t count = 0;
    enumerate_shifted(g, 0, g.universe_size(), [&](const Hypergraph&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateShifted)->DenseRange(3, 5, 1);

void BM_HallSizeAlgorithm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Family f = steal_family(3, n);
  for (auto _ : state) benchmark::DoNotOptimize(hall_size_algorithm(f));
}
BENCHMARK(BM_HallSizeAlgorithm)->DenseRange(6, 12, 3);

}  // namespace

BENCHMARK_MAIN();

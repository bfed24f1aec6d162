#include "hf/admissibility.hpp"
#include "hf/analyzed.hpp"
#include "hf/corpus.hpp"
#include "hf/domains.hpp"
#include "hf/exactla.hpp"
#include "hf/floer.hpp"
#include "hf/generators.hpp"
#include "hf/lp.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace hf;

namespace {

IntMatrix random_matrix(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dist(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = dist(rng);
  return m;
}

void BM_EnumerateGenerators(benchmark::State& state) {
  const HeegaardDiagram d = gsph(static_cast<int>(state.range(0)));
  const QuadrantStructure q = quadrants(d);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_generators(q, static_cast<int>(d.alpha.size())));
}
BENCHMARK(BM_EnumerateGenerators)->DenseRange(2, 5);

void BM_SmithInvariants(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(smith_invariants(m));
}
BENCHMARK(BM_SmithInvariants)->RangeMultiplier(2)->Range(4, 32);

void BM_HermiteNormalForm(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->RangeMultiplier(2)->Range(4, 32);

// Maximize the sum of the variables inside a random bounded polytope.
void BM_ExactSimplex(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> dist(0, 9);
  LinearProgram lp;
  lp.variables = n;
  lp.objective = RatVector(n, Rational(1));
  for (std::size_t i = 0; i < 2 * n; ++i) {
    RatVector row(n);
    for (auto& v : row) v = dist(rng) + 1;
    lp.add(row, Relation::LessEqual, Rational(10 * static_cast<long>(n)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(lp_optimize(lp));
}
BENCHMARK(BM_ExactSimplex)->RangeMultiplier(2)->Range(4, 16);

void BM_PositiveDomains(benchmark::State& state) {
  const AnalyzedDiagram a(gsph(3));
  const auto& gens = a.generators();
  for (auto _ : state)
    for (const auto& y : gens) benchmark::DoNotOptimize(positive_domains(a, gens.front(), y, 1, 0));
}
BENCHMARK(BM_PositiveDomains);

void BM_WeakAdmissibility(benchmark::State& state) {
  const AnalyzedDiagram a(s1s2_wind());
  for (auto _ : state) benchmark::DoNotOptimize(weak_admissible(a));
}
BENCHMARK(BM_WeakAdmissibility);

void BM_Homology(benchmark::State& state) {
  const AnalyzedDiagram a(gsph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(homology(a));
}
BENCHMARK(BM_Homology)->DenseRange(1, 4);

void BM_AnalyzeLens(benchmark::State& state) {
  const HeegaardDiagram d = lens(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(AnalyzedDiagram(d));
}
BENCHMARK(BM_AnalyzeLens)->DenseRange(3, 11, 4);

}  // namespace

BENCHMARK_MAIN();

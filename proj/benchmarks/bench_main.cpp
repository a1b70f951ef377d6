#include <benchmark/benchmark.h>

#include "hg/characters.hpp"
#include "hg/obstruction.hpp"
#include "hg/simplex.hpp"
#include "hg/subgroups.hpp"

using namespace hg;

static void BM_CharacterTableCyclic(benchmark::State &state) {
  for (auto _ : state) {
    // fresh group each time so the table cache does not hide the work
    auto g = builders::cyclic(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(character_table(g).irreducibles.size());
  }
}
BENCHMARK(BM_CharacterTableCyclic)->Arg(16)->Arg(27)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_CharacterTableQuaternion(benchmark::State &state) {
  for (auto _ : state) {
    auto g = builders::generalized_quaternion(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(character_table(g).irreducibles.size());
  }
}
BENCHMARK(BM_CharacterTableQuaternion)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_DeltaMultPairings(benchmark::State &state) {
  auto d = delta_mult(5, 3);
  const auto &tab = character_table(d.group());
  for (auto _ : state)
    for (const auto &chi : tab.irreducibles)
      benchmark::DoNotOptimize(inner_product(chi, d));
}
BENCHMARK(BM_DeltaMultPairings)->Unit(benchmark::kMillisecond);

static void BM_HurwitzQuaternionMinimal(benchmark::State &state) {
  auto q8 = builders::generalized_quaternion(2);
  ClassFunction a = ClassFunction::zero(q8);
  for (const char *h : {"<tau>", "<sigma>", "<sigma tau>"})
    a += induced_augmentation(q8, parse_subgroup(q8, h));
  for (auto _ : state)
    benchmark::DoNotOptimize(hurwitz_feasibility(q8, 2, a, static_cast<int>(state.range(0))).verdict);
}
BENCHMARK(BM_HurwitzQuaternionMinimal)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_HurwitzCyclic(benchmark::State &state) {
  auto g = builders::cyclic(9);
  auto a = Cyclotomic(3) * augmentation_character(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(hurwitz_feasibility(g, 3, a, 1).verdict);
}
BENCHMARK(BM_HurwitzCyclic)->Unit(benchmark::kMillisecond);

static void BM_SimplexDense(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  LinearProgram lp;
  lp.variables = n;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> row(n);
    for (int j = 0; j < n; ++j)
      row[j] = Rational((i * 7 + j * 3) % 11 + 1, 1 + (i + j) % 3);
    lp.add_row(row, i % 3 ? Sense::Le : Sense::Ge, Rational(n + i));
  }
  lp.objective.resize(n);
  for (int j = 0; j < n; ++j)
    lp.objective[j] = Rational(j % 5 + 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_lp(lp).status);
}
BENCHMARK(BM_SimplexDense)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "ekr/characters.hpp"
#include "ekr/gf.hpp"
#include "ekr/group.hpp"
#include "ekr/lp.hpp"
#include "ekr/search.hpp"
#include "ekr/spectra.hpp"

using ekr::group::Family;
using ekr::group::GroupContext;

namespace {

void BM_FieldMulInv(benchmark::State& state) {
  const auto f = ekr::gf::Field::make(static_cast<int>(state.range(0)));
  const int q = f.order();
  for (auto _ : state) {
    int acc = 1;
    for (int a = 1; a < q; ++a) acc = f.add(acc, f.mul(a, f.inv(a)));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMulInv)->Arg(7)->Arg(27)->Arg(64);

void BM_BuildGroup(benchmark::State& state) {
  const auto fam = static_cast<Family>(state.range(0));
  const int q = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto g = GroupContext::build(fam, q);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_BuildGroup)
    ->Args({static_cast<int>(Family::kGL), 7})
    ->Args({static_cast<int>(Family::kGL), 13})
    ->Args({static_cast<int>(Family::kAGL), 5})
    ->Args({static_cast<int>(Family::kPGL), 17})
    ->Unit(benchmark::kMillisecond);

void BM_CharacterTable(benchmark::State& state) {
  const auto g = GroupContext::build(static_cast<Family>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(ekr::chars::character_table(g).rows.size());
}
BENCHMARK(BM_CharacterTable)
    ->Args({static_cast<int>(Family::kGL), 7})
    ->Args({static_cast<int>(Family::kPSL), 11})
    ->Args({static_cast<int>(Family::kAGL), 4})
    ->Unit(benchmark::kMillisecond);

void BM_Spectrum(benchmark::State& state) {
  const auto g = GroupContext::build(Family::kGL, static_cast<int>(state.range(0)));
  const auto t = ekr::chars::character_table(g);
  const auto w = ekr::spectra::canonical_weights(g);
  for (auto _ : state) benchmark::DoNotOptimize(ekr::spectra::spectrum(g, t, w).max);
}
BENCHMARK(BM_Spectrum)->Arg(5)->Arg(9)->Unit(benchmark::kMicrosecond);

void BM_AglLp(benchmark::State& state) {
  const auto g = GroupContext::build(Family::kAGL, static_cast<int>(state.range(0)));
  const auto inst = ekr::lp::build_lp(g, ekr::chars::character_table(g));
  for (auto _ : state) benchmark::DoNotOptimize(ekr::lp::solve_lp(inst).objective);
}
BENCHMARK(BM_AglLp)->Arg(4)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_TwoIntersectingSearch(benchmark::State& state) {
  const auto g = GroupContext::build(Family::kPGL, static_cast<int>(state.range(0)));
  ekr::search::SearchOptions o;
  o.reduction = ekr::search::Reduction::kClasses;
  o.budget_seconds = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ekr::search::max_two_intersecting(g, o).size());
}
BENCHMARK(BM_TwoIntersectingSearch)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_AglCocliqueSearch(benchmark::State& state) {
  const auto g = GroupContext::build(Family::kAGL, 3);
  const auto graph = ekr::group::derangement_graph(g);
  ekr::search::SearchOptions o;
  o.reduction = ekr::search::Reduction::kClasses;
  o.budget_seconds = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ekr::search::max_coclique_cayley(g, graph, o).size());
}
BENCHMARK(BM_AglCocliqueSearch)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

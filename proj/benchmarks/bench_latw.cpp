#include <benchmark/benchmark.h>

#include "latw/basic_rt.hpp"
#include "latw/named.hpp"
#include "latw/planar.hpp"
#include "latw/triples.hpp"

using namespace latw;

static void BM_ConLatticeGrid(benchmark::State& state) {
  Lattice l = named::grid(std::size_t(state.range(0)), std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(con_lattice(l).size());
}
// Con(C_m x C_m) has 2^(2m-2) elements, so the tables grow fast past 6 x 6
BENCHMARK(BM_ConLatticeGrid)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

static void BM_ConLatticePartition(benchmark::State& state) {
  Lattice l = named::partition_lattice(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(con_lattice(l).size());
}
BENCHMARK(BM_ConLatticePartition)->DenseRange(3, 5);

static void BM_Principal(benchmark::State& state) {
  Lattice l = named::grid(6, 6);
  for (auto _ : state) benchmark::DoNotOptimize(principal(l, 0, 7).block_count());
}
BENCHMARK(BM_Principal);

static void BM_EnumerateLattices(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lattices(std::size_t(state.range(0))).size());
}
BENCHMARK(BM_EnumerateLattices)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_BooleanTriples(benchmark::State& state) {
  Lattice l = named::by_name(state.range(0) == 0 ? "N5" : "grid2x3");
  for (auto _ : state) benchmark::DoNotOptimize(boolean_triples(l).lattice.size());
}
BENCHMARK(BM_BooleanTriples)->Arg(0)->Arg(1);

static void BM_BasicRT(benchmark::State& state) {
  Poset p = chain_poset(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(basic_rt(p).lattice.size());
}
BENCHMARK(BM_BasicRT)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_FindPlanarDiagram(benchmark::State& state) {
  Lattice l = named::grid(std::size_t(state.range(0)), std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_planar_diagram(l).has_value());
}
BENCHMARK(BM_FindPlanarDiagram)->DenseRange(2, 4);

static void BM_StructureDecompose(benchmark::State& state) {
  PlanarDiagram d = random_sr(4, 4, std::size_t(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(structure_decompose(d).forks.size());
  state.counters["elements"] = double(d.size());
}
BENCHMARK(BM_StructureDecompose)->DenseRange(1, 7, 2);

static void BM_Coordinatize(benchmark::State& state) {
  PlanarDiagram d = random_sr(3, 3, 3, 11);
  auto cons = con_lattice(d.lattice()).congruences;
  for (auto _ : state)
    for (const auto& a : cons) benchmark::DoNotOptimize(coordinatize_congruence(d, a).exact);
}
BENCHMARK(BM_Coordinatize);

BENCHMARK_MAIN();

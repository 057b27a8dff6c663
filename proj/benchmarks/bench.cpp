#include <benchmark/benchmark.h>

#include <numeric>
#include <string>
#include <vector>

#include "ssc/compose.hpp"
#include "ssc/exact.hpp"
#include "ssc/graph.hpp"
#include "ssc/oracle.hpp"
#include "ssc/pactus.hpp"

namespace {

ssc::StructuredNetwork terminal_input_path(int n) {
  std::vector<ssc::NodeId> nodes(static_cast<std::size_t>(n));
  std::iota(nodes.begin(), nodes.end(), 1u);
  std::vector<std::pair<ssc::NodeId, ssc::NodeId>> edges;
  for (int i = 1; i < n; ++i)
    edges.emplace_back(static_cast<ssc::NodeId>(i),
                       static_cast<ssc::NodeId>(i + 1));
  return ssc::build_network(nodes, edges, {{"u1", 1}});
}

ssc::StructuredNetwork fig5_state() {
  std::vector<ssc::NodeId> nodes(16);
  std::iota(nodes.begin(), nodes.end(), 1u);
  std::vector<std::pair<ssc::NodeId, ssc::NodeId>> edges = {
      {1, 2},  {2, 3},   {2, 6},   {3, 4},   {4, 5},   {5, 6},  {6, 7},
      {7, 8},  {8, 9},   {4, 9},   {4, 10},  {10, 11}, {10, 12},
      {11, 12}, {9, 12}, {12, 13}, {13, 14}, {14, 15}, {15, 16}, {13, 16}};
  return ssc::build_network(nodes, edges, {});
}

std::vector<ssc::SeedComponent> fig5_seeds() {
  return {{{1, 2, 3}, ssc::ComponentKind::Path},
          {{4, 5, 6, 7, 8, 9}, ssc::ComponentKind::Cycle},
          {{10, 11, 12}, ssc::ComponentKind::Cycle},
          {{13, 14, 15, 16}, ssc::ComponentKind::Cycle}};
}

void BM_ExactSweep(benchmark::State& state) {
  auto net = terminal_input_path(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto report = ssc::is_ssc_exact(net);
    benchmark::DoNotOptimize(report.subsets_examined);
  }
}
BENCHMARK(BM_ExactSweep)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_MinInputs(benchmark::State& state) {
  auto net = fig5_state();
  auto dec = ssc::decompose(net, fig5_seeds());
  for (auto _ : state) {
    auto placement = ssc::min_inputs(net, dec);
    benchmark::DoNotOptimize(placement.external.size());
  }
}
BENCHMARK(BM_MinInputs)->Unit(benchmark::kMillisecond);

void BM_SampleVerdict(benchmark::State& state) {
  auto net = terminal_input_path(8);
  for (auto _ : state) {
    double fraction = ssc::sample_verdict(net, 50, 7);
    benchmark::DoNotOptimize(fraction);
  }
}
BENCHMARK(BM_SampleVerdict)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

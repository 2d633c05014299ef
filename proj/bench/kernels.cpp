// Kernel timings: OpenMP scan vs the serial reference, and LS vs FI.
#include <benchmark/benchmark.h>

#include <memory>

#include "colgraph/bench.hpp"
#include "colgraph/engine.hpp"
#include "colgraph/fi_traversal.hpp"
#include "colgraph/generators.hpp"
#include "colgraph/ls_traversal.hpp"

using namespace colgraph;

namespace {

const Graph& powerlaw_graph() {
  static const Graph g = [] {
    GeneratorSpec s = parse_generator("powerlaw:50000,2.2,8");
    s.seed = 7;
    return apply_clustering(generate_graph(s), Clustering::edge);
  }();
  return g;
}

const Graph& grid_graph() {
  static const Graph g = apply_clustering(generate_graph(parse_generator("grid:200x200")), Clustering::edge);
  return g;
}

VertexSet half_working_set(const Graph& g) {
  std::vector<VertexCode> codes;
  for (VertexCode v = 0; v < g.vertex_count(); v += 2) codes.push_back(v);
  return VertexSet(std::move(codes), g.vertex_count());
}

void BM_ScanSerial(benchmark::State& state) {
  const Graph& g = powerlaw_graph();
  const EdgeView view = edge_view(g.edges, Direction::forward);
  const VertexSet working = half_working_set(g);
  const PositionRange all{0, static_cast<Position>(g.edge_count())};
  for (auto _ : state) {
    state.PauseTiming();
    ActiveEdgeList ea(g.edge_count(), true);
    state.ResumeTiming();
    benchmark::DoNotOptimize(ls_scan_serial(view, working, ea, {&all, 1}));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}

void BM_ScanParallel(benchmark::State& state) {
  const Graph& g = powerlaw_graph();
  const EdgeView view = edge_view(g.edges, Direction::forward);
  const VertexSet working = half_working_set(g);
  const PositionRange all{0, static_cast<Position>(g.edge_count())};
  const ScanPartitioning part(g.edge_count(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    state.PauseTiming();
    ActiveEdgeList ea(g.edge_count(), true);
    state.ResumeTiming();
    benchmark::DoNotOptimize(ls_scan(view, working, ea, {&all, 1}, part));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}

void run_operator(benchmark::State& state, const Graph& graph, OperatorKind op) {
  auto g = std::make_shared<const Graph>(graph);
  TraversalEngine engine(g, CostParams{1.0, 0.01, 128}, {});
  engine.tgi(Direction::forward);
  const auto starts = sample_start_vertices(g->edges, Direction::forward, 16, 3);
  std::size_t i = 0;
  double edges = 0;
  for (auto _ : state) {
    TraversalConfig cfg;
    cfg.start_vertices = {g->edges.vertex_dictionary().decode(starts[i++ % starts.size()])};
    cfg.collect = cfg.recurse = static_cast<Depth>(state.range(0));
    const auto res = engine.traverse(cfg, op);
    edges += static_cast<double>(res.report.counters.edges_read);
  }
  state.counters["edges_read"] = benchmark::Counter(edges, benchmark::Counter::kAvgIterations);
}

void BM_GridLS(benchmark::State& s) { run_operator(s, grid_graph(), OperatorKind::ls); }
void BM_GridFI(benchmark::State& s) { run_operator(s, grid_graph(), OperatorKind::fi); }
void BM_PowerlawLS(benchmark::State& s) { run_operator(s, powerlaw_graph(), OperatorKind::ls); }
void BM_PowerlawFI(benchmark::State& s) { run_operator(s, powerlaw_graph(), OperatorKind::fi); }

}  // namespace

BENCHMARK(BM_ScanSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ScanParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GridLS)->Arg(1)->Arg(3)->Arg(6)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GridFI)->Arg(1)->Arg(3)->Arg(6)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PowerlawLS)->Arg(1)->Arg(3)->Arg(6)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PowerlawFI)->Arg(1)->Arg(3)->Arg(6)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

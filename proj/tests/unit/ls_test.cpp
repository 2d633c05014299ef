#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "colgraph/engine.hpp"
#include "colgraph/ls_traversal.hpp"
#include "colgraph/predicate.hpp"
#include "fixtures.hpp"
#include "reference.hpp"

using namespace colgraph;
using namespace colgraph::testing;

namespace {

struct ClusteredFixture {
  Graph g = fixture_graph();
  EdgeColumnGroup edges = cluster_by_edge(cluster_by_type(g.edges));
  VertexCode code(const char* id) const { return *edges.vertex_dictionary().encode(id); }
};

}  // namespace

TEST_CASE("scan partitioning covers the domain with near-equal slices") {
  for (std::size_t total : {0, 1, 7, 64, 1001}) {
    for (std::size_t parts : {1, 2, 4, 8}) {
      const ScanPartitioning p(total, parts);
      CHECK(p.count() == parts);
      CHECK(p.begin(0) == 0);
      CHECK(p.end(parts - 1) == total);
      for (std::size_t i = 0; i < parts; ++i) {
        CHECK(p.end(i) - p.begin(i) >= total / parts);
        CHECK(p.end(i) - p.begin(i) <= total / parts + 1);
      }
    }
  }
}

TEST_CASE("vertex set switches representation") {
  const VertexSet sparse({1, 5}, 1000);
  CHECK_FALSE(sparse.is_dense());
  CHECK(sparse.contains(5));
  CHECK_FALSE(sparse.contains(4));
  std::vector<VertexCode> many(100);
  for (VertexCode i = 0; i < 100; ++i) many[i] = 2 * i;
  const VertexSet dense(many, 1000);
  CHECK(dense.is_dense());
  CHECK(dense.contains(198));
  CHECK_FALSE(dense.contains(199));
}

TEST_CASE("ls_scan on the clustered fixture") {
  ClusteredFixture f;
  const auto pc = prepare({{"A"}, parse_predicate("type=a"), 0, 1, Direction::forward}, f.edges);
  const EdgeView view = edge_view(f.edges, Direction::forward);
  const VertexSet working({f.code("A")}, f.edges.vertex_dictionary().size());
  for (std::size_t parts : {1, 2, 4, 8}) {
    ActiveEdgeList ea = pc.active_edges;
    const ScanPartitioning part(total_size(pc.scan_ranges), parts);
    const auto hits = ls_scan(view, working, ea, pc.scan_ranges, part);
    CHECK(hits == PositionList{0, 1, 2});
    CHECK(ls_scan(view, working, ea, pc.scan_ranges, part).empty());
    CHECK(ea.count() == 1);

    const auto targets = ls_materialize(view, hits, parts);
    CHECK(decode(targets, f.edges.vertex_dictionary()) == std::vector<std::string>{"B", "C", "D"});
  }
  ActiveEdgeList ea = pc.active_edges;
  const VertexSet none({f.code("E")}, 6);
  CHECK(ls_scan_serial(view, none, ea, pc.scan_ranges).empty());
  CHECK(ls_materialize(view, {}).empty());
}

TEST_CASE("materialize deduplicates targets") {
  std::vector<EdgeRecord> e{{"x", "z", {{"type", "t"}}}, {"y", "z", {{"type", "t"}}}};
  const auto g = build_graph_from_edges(e);
  const auto view = edge_view(g.edges, Direction::forward);
  CHECK(ls_materialize(view, {0, 1}).size() == 1);
}

TEST_CASE("ls_traverse on the fixture") {
  ClusteredFixture f;
  const auto pc = prepare({{"A"}, parse_predicate("type=a"), 0, 1, Direction::forward}, f.edges);
  TraversalCounters counters;
  const LevelMap levels = ls_traverse(pc, f.edges, 4, counters);
  CHECK(levels.level(f.code("A")) == 0);
  CHECK(levels.level(f.code("B")) == 1);
  CHECK(levels.level(f.code("D")) == 1);
  CHECK_FALSE(levels.seen(f.code("F")));
  CHECK(decode(generate_result(levels, 0, 1), f.edges.vertex_dictionary()) ==
        std::vector<std::string>{"A", "B", "C", "D"});
  CHECK(counters.iterations == 1);
  CHECK(counters.edges_read == 4);  // the type-a range only

  TraversalCounters deep;
  const auto far = prepare({{"A"}, parse_predicate("*"), 0, 50, Direction::forward}, f.edges);
  ls_traverse(far, f.edges, 2, deep);
  CHECK(deep.iterations == 3);
  CHECK(deep.edges_read == 3 * 6);
}

TEST_CASE("parallel scan matches the serial reference and is partition independent") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 80; ++round) {
    std::size_t n = 0;
    const auto edges = random_edges(rng, {}, &n);
    Graph g = build_graph(numbered_vertices(n), edges);
    if (round % 2) g.edges = cluster_by_type(g.edges);
    const auto pred = random_type_predicate(rng, 4);
    const auto dir = round % 3 ? Direction::forward : Direction::backward;
    const auto pc = prepare({{"n0"}, parse_predicate(pred), 0, 8, dir}, g.edges);
    const auto view = edge_view(g.edges, dir);

    std::vector<VertexCode> ws;
    for (VertexCode v = 0; v < n; ++v) {
      if (rng() % 3 == 0) ws.push_back(v);
    }
    const VertexSet working(ws, n);
    ActiveEdgeList reference_ea = pc.active_edges;
    const auto expected = ls_scan_serial(view, working, reference_ea, pc.scan_ranges);
    std::set<Position> unique(expected.begin(), expected.end());
    CHECK(unique.size() == expected.size());
    for (std::size_t parts : {1, 2, 4, 8}) {
      ActiveEdgeList ea = pc.active_edges;
      CHECK(ls_scan(view, working, ea, pc.scan_ranges, ScanPartitioning(total_size(pc.scan_ranges), parts)) ==
            expected);
      CHECK(ea == reference_ea);
    }

    TraversalCounters c1;
    const LevelMap base = ls_traverse(pc, g.edges, 1, c1);
    for (std::size_t parts : {2, 4, 8}) {
      TraversalCounters c;
      CHECK(ls_traverse(pc, g.edges, parts, c) == base);
      CHECK(c.edges_read == c1.edges_read);
    }
    CHECK(c1.edges_read == c1.iterations * total_size(pc.scan_ranges));
    CHECK(generate_result(base, 0, 8) == oracle_traverse(pc, g.edges));
  }
}

#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "colgraph/error.hpp"
#include "colgraph/generators.hpp"
#include "colgraph/graph_io.hpp"
#include "colgraph/stats.hpp"
#include "colgraph/storage.hpp"
#include "fixtures.hpp"
#include "reference.hpp"

using namespace colgraph;
using namespace colgraph::testing;

namespace {

std::vector<std::string> record_strings(const EdgeColumnGroup& g) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto r = record_at(g, i);
    std::string s = r.source + "|" + r.target;
    for (const auto& [k, v] : r.attributes) s += "|" + k + "=" + v;
    out.push_back(s);
  }
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("dictionary codes are dense and sorted") {
  const auto d = Dictionary::from_values({"c", "a", "b", "a"});
  CHECK(d.size() == 3);
  CHECK(d.encode("a") == 0u);
  CHECK(d.encode("c") == 2u);
  CHECK_FALSE(d.encode("z").has_value());
  CHECK(d.decode(1) == "b");
  CHECK_THROWS_AS(d.decode(3), std::logic_error);
}

TEST_CASE("fixture builds six vertices and six edges") {
  const Graph g = fixture_graph();
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 6);
  CHECK(g.edges.layout == EdgeLayout::unclustered);
  CHECK(g.edges.source.dictionary == g.edges.target.dictionary);
  CHECK(record_strings(g.edges).front() == "A|B|type=a");
}

TEST_CASE("empty edge list is a valid graph") {
  const Graph g = build_graph_from_edges({});
  CHECK(g.edge_count() == 0);
  CHECK(g.vertex_count() == 0);
  const auto c = cluster_by_type(g.edges);
  CHECK(c.size() == 0);
  CHECK(c.type_ranges.empty());
}

TEST_CASE("duplicate vertex id is rejected by name") {
  std::vector<VertexRecord> v{{"A", {}}, {"A", {}}};
  try {
    build_graph(v, {});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("'A'") != std::string::npos);
  }
}

TEST_CASE("edge to an undeclared vertex is rejected") {
  std::vector<VertexRecord> v{{"A", {}}};
  std::vector<EdgeRecord> e{{"A", "Q", {{"type", "a"}}}};
  CHECK_THROWS_AS(build_graph(v, e), Error);
}

TEST_CASE("cluster_by_type on the fixture") {
  const Graph g = fixture_graph();
  const auto c = cluster_by_type(g.edges);
  CHECK(c.layout == EdgeLayout::type_clustered);
  const auto* type = c.attribute("type");
  REQUIRE(type != nullptr);
  const auto a = *type->dictionary->encode("a");
  const auto b = *type->dictionary->encode("b");
  CHECK(c.type_ranges.at(a) == PositionRange{0, 4});
  CHECK(c.type_ranges.at(b) == PositionRange{4, 6});
  CHECK(sorted(record_strings(c)) == sorted(record_strings(g.edges)));
}

TEST_CASE("single type clusters to one range") {
  std::vector<EdgeRecord> e{{"x", "y", {{"type", "t"}}}, {"y", "x", {{"type", "t"}}}};
  const auto g = build_graph_from_edges(e);
  const auto c = cluster_by_type(g.edges);
  CHECK(record_strings(c) == record_strings(g.edges));
  REQUIRE(c.type_ranges.size() == 1);
  CHECK(c.type_ranges.begin()->second == PositionRange{0, 2});
}

TEST_CASE("cluster_by_edge makes sources contiguous within each type") {
  const Graph g = fixture_graph();
  const auto c = cluster_by_edge(cluster_by_type(g.edges));
  CHECK(c.layout == EdgeLayout::type_then_edge_clustered);
  const auto rec = record_strings(c);
  CHECK(rec[0].rfind("A|", 0) == 0);
  CHECK(rec[1].rfind("A|", 0) == 0);
  CHECK(rec[2].rfind("A|", 0) == 0);
  CHECK(rec[3] == "D|F|type=a");
  CHECK(cluster_by_edge(c) == c);
  CHECK_THROWS_AS(cluster_by_edge(g.edges), Error);
}

TEST_CASE("clustering preserves the record multiset and partitions positions") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    const auto edges = random_edges(rng, {});
    const auto g = build_graph_from_edges(edges);
    const auto t = cluster_by_type(g.edges);
    const auto e = cluster_by_edge(t);
    CHECK(sorted(record_strings(e)) == sorted(record_strings(g.edges)));
    Position next = 0;
    for (const auto& [code, range] : e.type_ranges) {
      CHECK(range.begin == next);
      next = range.end;
    }
    CHECK(next == e.size());
    // Sources ascend inside each type range.
    for (const auto& [code, range] : e.type_ranges) {
      for (auto i = range.begin + 1; i < range.end; ++i) CHECK(e.source.codes[i - 1] <= e.source.codes[i]);
    }
  }
}

TEST_CASE("dictionary roundtrip for every stored value") {
  std::mt19937_64 rng(5);
  const auto edges = random_edges(rng, {});
  const auto g = build_graph_from_edges(edges);
  const auto& d = g.edges.vertex_dictionary();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    CHECK(d.decode(g.edges.source.codes[i]) == edges[i].source);
    CHECK(*d.encode(edges[i].target) == g.edges.target.codes[i]);
  }
  for (ValueCode c = 0; c < d.size(); ++c) CHECK(*d.encode(d.decode(c)) == c);
}

TEST_CASE("missing attribute values are stored as nulls") {
  std::vector<EdgeRecord> e{{"x", "y", {{"type", "t"}, {"w", "3"}}}, {"y", "x", {{"type", "t"}}}};
  const auto g = build_graph_from_edges(e);
  const auto* w = g.edges.attribute("w");
  REQUIRE(w != nullptr);
  CHECK_FALSE(w->is_null(0));
  CHECK(w->is_null(1));
}

TEST_CASE("graph statistics") {
  SUBCASE("path of five") {
    const auto g = generate_graph(parse_generator("path:5"));
    const auto s = compute_stats(g.edges, g.vertices, 100);
    CHECK(s.edge_count == 4);
    CHECK(s.avg_outdegree == doctest::Approx(0.8));
    CHECK(s.max_outdegree == 1);
    CHECK(s.est_diameter == doctest::Approx(4.0));
  }
  SUBCASE("fixture") {
    const Graph g = fixture_graph();
    const auto s = compute_stats(g.edges, g.vertices, 100);
    CHECK(s.avg_outdegree == doctest::Approx(1.0));
    CHECK(s.max_outdegree == 3);
  }
  SUBCASE("outward star") {
    const auto g = generate_graph(parse_generator("star:4"));
    const auto s = compute_stats(g.edges, g.vertices, 100);
    CHECK(s.max_outdegree == 4);
    CHECK(s.est_diameter == doctest::Approx(1.0));
  }
  SUBCASE("zero samples") {
    const Graph g = fixture_graph();
    CHECK_THROWS(compute_stats(g.edges, g.vertices, 0));
  }
}

TEST_CASE("interpolated percentile") {
  CHECK(interpolated_percentile({1, 2, 3, 4}, 0.5) == doctest::Approx(2.5));
  CHECK(interpolated_percentile({0, 0, 0, 0, 4}, 0.9) == doctest::Approx(4.0));
  CHECK(interpolated_percentile({7}, 0.9) == doctest::Approx(7.0));
}

TEST_CASE("TSV loading") {
  SUBCASE("fixture file") {
    std::istringstream in(fixture_tsv());
    const Graph g = read_graph_tsv(in);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 6);
  }
  SUBCASE("empty file") {
    std::istringstream in("");
    const Graph g = read_graph_tsv(in);
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("comments, blank lines and attributes") {
    std::istringstream in("# header\n\nx\ty\tknows\tsince=2001\n");
    const Graph g = read_graph_tsv(in);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edges.attribute("since") != nullptr);
  }
  SUBCASE("malformed line 3") {
    std::istringstream in("A\tB\ta\nB\tC\ta\nbroken\n");
    try {
      read_graph_tsv(in);
      FAIL("expected an error");
    } catch (const LoadError& e) {
      CHECK(e.line() == 3);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("vertex file") {
    std::istringstream e("A\tB\ta\n");
    std::istringstream v("A\tname=x\nB\nC\n");
    const Graph g = read_graph_tsv(e, &v);
    CHECK(g.vertex_count() == 3);
  }
  SUBCASE("write then read") {
    const Graph g = fixture_graph();
    std::ostringstream out;
    write_graph_tsv(out, g.edges);
    std::istringstream in(out.str());
    CHECK(record_strings(read_graph_tsv(in).edges) == record_strings(g.edges));
  }
}

TEST_CASE("generators") {
  CHECK(generate_graph(parse_generator("path:5")).edge_count() == 4);
  CHECK(generate_graph(parse_generator("grid:10x10")).edge_count() == 2 * (2 * 10 * 10 - 10 - 10));
  CHECK(generate_graph(parse_generator("grid:7x3")).edge_count() == 2 * (2 * 7 * 3 - 7 - 3));
  CHECK(generate_graph(parse_generator("star:6")).edge_count() == 6);
  CHECK(vertex_id(7, 1000) == "v007");

  GeneratorSpec s = parse_generator("powerlaw:2000,2.2,8");
  s.type_count = 3;
  s.zipf_weights = true;
  const auto a = generate_graph(s);
  const auto b = generate_graph(s);
  CHECK(record_strings(a.edges) == record_strings(b.edges));
  CHECK(a.edges.attribute("weight") != nullptr);
  const double d = static_cast<double>(a.edge_count()) / static_cast<double>(a.vertex_count());
  CHECK(d == doctest::Approx(8.0).epsilon(0.1));
  for (std::size_t i = 0; i < a.edge_count(); ++i) CHECK(a.edges.source.codes[i] != a.edges.target.codes[i]);

  s.seed = 2;
  CHECK(record_strings(generate_graph(s).edges) != record_strings(a.edges));

  CHECK_THROWS(parse_generator("grid:0x3"));
  CHECK_THROWS(parse_generator("powerlaw:10,0.5,2"));
  CHECK_THROWS(parse_generator("hypercube:3"));
}

#pragma once

#include <string>
#include <vector>

#include "colgraph/storage.hpp"
#include "colgraph/traversal.hpp"

namespace colgraph::testing {

// Six vertices A..F, six typed edges. Every row of the small configuration
// table in the test suites holds on this graph.
inline std::vector<EdgeRecord> fixture_edges() {
  auto e = [](const char* s, const char* t, const char* type) {
    return EdgeRecord{s, t, {{kTypeAttribute, type}}};
  };
  return {e("A", "B", "a"), e("A", "C", "a"), e("A", "D", "a"),
          e("D", "F", "a"), e("D", "C", "b"), e("C", "E", "b")};
}

inline std::vector<VertexRecord> fixture_vertices() {
  std::vector<VertexRecord> v;
  for (const char* id : {"A", "B", "C", "D", "E", "F"}) v.push_back({id, {}});
  return v;
}

inline Graph fixture_graph() {
  const auto v = fixture_vertices();
  const auto e = fixture_edges();
  return build_graph(v, e);
}

inline const char* fixture_tsv() {
  return "A\tB\ta\nA\tC\ta\nA\tD\ta\nD\tF\ta\nD\tC\tb\nC\tE\tb\n";
}

struct FixtureRow {
  std::vector<std::string> starts;
  std::string predicate;
  Depth collect;
  Depth recurse;
  Direction direction;
  std::vector<std::string> expected;
};

inline std::vector<FixtureRow> fixture_rows() {
  const auto fwd = Direction::forward;
  return {
      {{"A"}, "type = a", 0, 1, fwd, {"A", "B", "C", "D"}},
      {{"A"}, "type = a", 0, 1, fwd, {"A", "B", "C", "D"}},
      {{"A"}, "type = a", 1, 1, fwd, {"B", "C", "D"}},
      {{"A"}, "type = a", 2, 2, fwd, {"F"}},
      {{"A"}, "type = a", 1, kInfiniteDepth, fwd, {"B", "C", "D", "F"}},
      {{"E"}, "type = b", 2, 2, Direction::backward, {"D"}},
      {{"A"}, "type = a ∨ type = b", 2, 2, fwd, {"E", "F"}},
  };
}

// Sixteen edges over ids "10".."19" laid out so that, with fixed fragments of
// four records (0-based F0..F3), fragment F1 has successors {F1, F2, F3}.
inline std::vector<EdgeRecord> chain_edges() {
  auto e = [](const char* s, const char* t) { return EdgeRecord{s, t, {{kTypeAttribute, "a"}}}; };
  return {e("10", "11"), e("10", "13"), e("11", "10"), e("11", "12"),
          e("13", "12"), e("14", "13"), e("14", "16"), e("14", "17"),
          e("15", "17"), e("15", "18"), e("16", "17"), e("16", "18"),
          e("12", "15"), e("12", "19"), e("15", "19"), e("15", "10")};
}

}  // namespace colgraph::testing

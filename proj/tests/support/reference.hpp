#pragma once

// Reference implementations used only by tests. They share nothing with the
// library beyond the storage types.

#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "colgraph/predicate.hpp"
#include "colgraph/storage.hpp"
#include "colgraph/traversal.hpp"

namespace colgraph::testing {

// Shortest-hop BFS over the matching edges; result is {v : c <= dist(v) <= r}.
inline std::vector<std::string> bfs_reference(const EdgeColumnGroup& g, const std::vector<std::string>& starts,
                                              const Predicate& predicate, Depth collect, Depth recurse,
                                              Direction d) {
  const Dictionary& dict = g.vertex_dictionary();
  const std::size_t n = dict.size();
  std::vector<std::vector<VertexCode>> adj(n);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const EdgeRecord rec = record_at(g, i);
    bool match = true;
    if (predicate.kind != Predicate::Kind::always_true) {
      // Evaluate by hand on the decoded record.
      std::vector<std::pair<std::string, std::string>> attrs(rec.attributes.begin(), rec.attributes.end());
      auto lookup = [&](const std::string& name) -> const std::string* {
        for (const auto& [k, v] : attrs) {
          if (k == name) return &v;
        }
        return nullptr;
      };
      auto eval = [&](auto&& self, const Predicate& p) -> bool {
        switch (p.kind) {
          case Predicate::Kind::always_true: return true;
          case Predicate::Kind::atom: {
            const std::string* v = lookup(p.attribute);
            return v != nullptr && compare_values(*v, p.op, p.literal);
          }
          case Predicate::Kind::conjunction:
            for (const auto& c : p.children) {
              if (!self(self, c)) return false;
            }
            return true;
          case Predicate::Kind::disjunction:
            for (const auto& c : p.children) {
              if (self(self, c)) return true;
            }
            return false;
          case Predicate::Kind::negation: return !self(self, p.children.front());
        }
        return false;
      };
      match = eval(eval, predicate);
    }
    if (!match) continue;
    const auto s = *dict.encode(rec.source);
    const auto t = *dict.encode(rec.target);
    if (d == Direction::forward) adj[s].push_back(t);
    else adj[t].push_back(s);
  }

  constexpr std::uint64_t unseen = UINT64_MAX;
  std::vector<std::uint64_t> dist(n, unseen);
  std::deque<VertexCode> queue;
  for (const auto& s : starts) {
    const auto code = *dict.encode(s);
    if (dist[code] == unseen) {
      dist[code] = 0;
      queue.push_back(code);
    }
  }
  while (!queue.empty()) {
    const VertexCode u = queue.front();
    queue.pop_front();
    if (recurse != kInfiniteDepth && dist[u] >= recurse) continue;
    for (VertexCode v : adj[u]) {
      if (dist[v] == unseen) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  std::vector<std::string> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (dist[v] != unseen && dist[v] >= collect && (recurse == kInfiniteDepth || dist[v] <= recurse)) {
      out.push_back(dict.decode(static_cast<ValueCode>(v)));
    }
  }
  return out;
}

// Every fragment pair (a, b) joined by a length-2 path whose first edge lies
// in a and whose second edge lies in b.
inline std::set<std::pair<std::size_t, std::size_t>> brute_force_transitions(
    const EdgeColumnGroup& g, const std::vector<PositionRange>& fragments, Direction d) {
  const auto& keys = d == Direction::forward ? g.source.codes : g.target.codes;
  const auto& values = d == Direction::forward ? g.target.codes : g.source.codes;
  std::vector<std::size_t> owner(g.size());
  for (std::size_t f = 0; f < fragments.size(); ++f) {
    for (auto i = fragments[f].begin; i < fragments[f].end; ++i) owner[i] = f;
  }
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (values[i] == keys[j]) out.insert({owner[i], owner[j]});
    }
  }
  return out;
}

struct RandomGraphOptions {
  std::size_t max_vertices = 200;
  double min_outdegree = 0.5;
  double max_outdegree = 20.0;
  std::size_t max_types = 4;
};

// Random typed multigraph with self-loops allowed. Ids are "n<index>".
inline std::vector<EdgeRecord> random_edges(std::mt19937_64& rng, const RandomGraphOptions& o,
                                            std::size_t* vertex_count = nullptr) {
  std::uniform_int_distribution<std::size_t> nv(1, o.max_vertices);
  std::uniform_real_distribution<double> deg(o.min_outdegree, o.max_outdegree);
  std::uniform_int_distribution<std::size_t> nt(1, o.max_types);
  const std::size_t n = nv(rng);
  const auto m = static_cast<std::size_t>(deg(rng) * static_cast<double>(n));
  const std::size_t types = nt(rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1), type(0, types - 1);
  std::vector<EdgeRecord> edges;
  for (std::size_t i = 0; i < m; ++i) {
    edges.push_back({"n" + std::to_string(pick(rng)), "n" + std::to_string(pick(rng)),
                     {{kTypeAttribute, std::string(1, static_cast<char>('a' + type(rng)))}}});
  }
  if (vertex_count) *vertex_count = n;
  return edges;
}

// Vertices n0..n(count-1), so that isolated vertices can be start vertices.
inline std::vector<VertexRecord> numbered_vertices(std::size_t count) {
  std::vector<VertexRecord> v;
  for (std::size_t i = 0; i < count; ++i) v.push_back({"n" + std::to_string(i), {}});
  return v;
}

// Random predicate over the type attribute: a disjunction of equalities or
// its negation, or all edges.
inline std::string random_type_predicate(std::mt19937_64& rng, std::size_t max_types) {
  std::uniform_int_distribution<int> shape(0, 3);
  const int s = shape(rng);
  if (s == 0) return "*";
  std::string out;
  for (std::size_t t = 0; t < max_types; ++t) {
    if (rng() % 2 == 0) continue;
    if (!out.empty()) out += " or ";
    out += std::string("type = ") + static_cast<char>('a' + t);
  }
  if (out.empty()) out = "type = a";
  if (s == 3) out = "not (" + out + ")";
  return out;
}

}  // namespace colgraph::testing

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "colgraph/storage.hpp"

namespace colgraph {

/// Synthetic graph families used by the benchmarks.
struct GeneratorSpec {
  enum class Kind {
    path,      // v0 -> v1 -> ... -> v(n-1)
    star,      // one centre with n outgoing edges
    grid,      // width x height, 4-neighbour, both directions
    powerlaw,  // directed Chung-Lu graph with power-law degree weights
    uniform,   // n vertices, round(n * avg_outdegree) uniformly random edges
  };

  Kind kind = Kind::path;
  std::size_t n = 0;
  std::size_t width = 0;
  std::size_t height = 0;
  double alpha = 2.2;
  double avg_outdegree = 8.0;
  std::size_t type_count = 1;  // edge types "a", "b", ... drawn uniformly
  bool zipf_weights = false;   // integer "weight" in [1, 100], P(k) ~ k^-2
  bool shuffle = true;         // random physical edge order
  std::uint64_t seed = 1;
};

/// Parses "path:N", "star:N", "grid:WxH", "powerlaw:N,ALPHA,AVG_OUTDEGREE",
/// "uniform:N,AVG_OUTDEGREE".
GeneratorSpec parse_generator(const std::string& text);
std::string to_string(const GeneratorSpec& spec);

/// Vertex ids are "v" followed by a zero-padded index so that lexicographic
/// dictionary order equals index order.
std::string vertex_id(std::size_t index, std::size_t vertex_count);

Graph generate_graph(const GeneratorSpec& spec);

}  // namespace colgraph

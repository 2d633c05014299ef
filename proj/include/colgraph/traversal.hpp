#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "colgraph/bitset.hpp"
#include "colgraph/predicate.hpp"
#include "colgraph/storage.hpp"

namespace colgraph {

/// Traversal depth in hops. kInfiniteDepth encodes an unbounded recursion
/// boundary.
using Depth = std::uint32_t;
inline constexpr Depth kInfiniteDepth = std::numeric_limits<Depth>::max();

enum class Direction { forward, backward };

const char* to_string(Direction d);
std::string depth_to_string(Depth d);

/// User-facing traversal configuration: start ids, edge predicate,
/// collection boundary, recursion boundary and direction.
struct TraversalConfig {
  std::vector<std::string> start_vertices;
  Predicate predicate;
  Depth collect = 0;
  Depth recurse = 1;
  Direction direction = Direction::forward;
};

/// Encoded configuration handed to the traversal operators.
struct PreparedConfig {
  std::vector<VertexCode> starts;  // sorted, unique
  ActiveEdgeList active_edges;
  // Position ranges a full scan must cover: the selected type ranges on a
  // type-clustered layout, otherwise the whole column.
  std::vector<PositionRange> scan_ranges;
  Depth collect = 0;
  Depth recurse = 1;
  Direction direction = Direction::forward;
};

/// Column handles oriented by traversal direction: operators probe `keys`
/// and materialize from `values`. Backward traversal swaps the columns.
struct EdgeView {
  std::span<const VertexCode> keys;
  std::span<const VertexCode> values;

  std::size_t size() const noexcept { return keys.size(); }
};

EdgeView edge_view(const EdgeColumnGroup& g, Direction d);

/// Smallest discovery level per vertex code.
class LevelMap {
 public:
  static constexpr Depth kUnseen = std::numeric_limits<Depth>::max();

  LevelMap() = default;
  explicit LevelMap(std::size_t vertex_count) : levels_(vertex_count, kUnseen) {}

  std::size_t vertex_count() const noexcept { return levels_.size(); }
  Depth level(VertexCode v) const noexcept { return levels_[v]; }
  bool seen(VertexCode v) const noexcept { return levels_[v] != kUnseen; }
  void set(VertexCode v, Depth level) noexcept { levels_[v] = level; }
  std::span<const Depth> levels() const noexcept { return levels_; }

  friend bool operator==(const LevelMap&, const LevelMap&) = default;

 private:
  std::vector<Depth> levels_;
};

/// Work counters reported by the operators.
struct TraversalCounters {
  std::uint64_t edges_read = 0;      // edge records whose key cell was inspected
  std::uint64_t fragments_read = 0;  // fragment scans (FI only)
  std::uint64_t iterations = 0;      // level iterations (LS) or fragment rounds (FI)
};

/// {v : collect <= level(v) <= recurse}, ascending by code.
std::vector<VertexCode> generate_result(const LevelMap& levels, Depth collect, Depth recurse);

/// Translates codes back to vertex ids. An invalid code is an internal error
/// (std::logic_error).
std::vector<std::string> decode(std::span<const VertexCode> codes, const Dictionary& dict);

/// Reference semantics: literal level sets D_i built by enumerating every
/// active edge per level (no edge invalidation), combined as
/// (D_c ∪ … ∪ D_r) \ (D_0 ∪ … ∪ D_{c-1}). Stops once D_i is empty or the union
/// of all levels stops growing, which makes r = ∞ finite.
std::vector<VertexCode> oracle_traverse(const PreparedConfig& pc, const EdgeColumnGroup& g);

}  // namespace colgraph

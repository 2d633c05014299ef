#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "colgraph/ls_traversal.hpp"
#include "colgraph/tgi.hpp"
#include "colgraph/traversal.hpp"

namespace colgraph {

/// Fragment candidates keyed by accumulated match count. Higher priority is
/// extracted first; ties go to the lower fragment id (lower start position).
class FragmentQueue {
 public:
  explicit FragmentQueue(std::size_t fragment_count = 0) : priority_(fragment_count, 0) {}

  /// Inserts with priority 1, or increases the priority by one if queued.
  void bump(FragmentId f);
  std::optional<FragmentId> pop();

  bool contains(FragmentId f) const noexcept { return priority_[f] != 0; }
  std::uint64_t priority(FragmentId f) const noexcept { return priority_[f]; }
  bool empty() const noexcept { return order_.empty(); }
  std::size_t size() const noexcept { return order_.size(); }

 private:
  struct Order {
    bool operator()(const std::pair<std::uint64_t, FragmentId>& a,
                    const std::pair<std::uint64_t, FragmentId>& b) const noexcept {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    }
  };
  std::vector<std::uint64_t> priority_;  // 0 = not queued
  std::set<std::pair<std::uint64_t, FragmentId>, Order> order_;
};

/// Per-query state of a fragmented-incremental traversal.
struct FiRuntimeState {
  FiRuntimeState(const PreparedConfig& pc, std::size_t vertex_count, std::size_t fragment_count);

  std::vector<FragmentId> chain;  // fragments in processing order
  FragmentQueue queue;
  // (fragment, vertex) pairs that already raised a fragment's priority.
  std::unordered_set<std::uint64_t> invalidation;
  std::vector<VertexCode> frontiers;
  LevelMap levels;
  Depth s_factor = 1;  // key levels probed by the scan: levels < s_factor
  Depth m_factor = 1;  // highest level materialized
  Depth recurse = 1;
  ActiveEdgeList active;
  // Positions consumed per key vertex, restored if the vertex's level drops.
  std::unordered_map<VertexCode, std::vector<Position>> consumed;
  // Fragments holding restored positions; queued on the next selection.
  std::vector<FragmentId> requeue;
  TraversalCounters counters;

  static std::uint64_t invalidation_key(FragmentId f, VertexCode v) noexcept {
    return (static_cast<std::uint64_t>(f) << 32) | v;
  }
};

/// Probes the synopses of the successors of the last processed fragment (all
/// fragments while the chain is empty) with the current frontiers, raises the
/// priority of each fragment once per matching (fragment, vertex) pair, then
/// extracts the best fragment and appends it to the chain. Returns
/// std::nullopt once the queue is exhausted.
std::optional<FragmentId> get_next_fragment(FiRuntimeState& state, const TransitionGraphIndex& tgi);

/// Scans one fragment for active edges whose key has a level below
/// s_factor. Returns position lists indexed by the level they lead to (index
/// 0 is always empty). Matched edges are consumed.
std::vector<PositionList> n_way_scan(const EdgeView& view, const Fragment& fragment, FiRuntimeState& state);

/// Records the targets of the scanned positions up to min(m_factor, r). A
/// vertex found at a lower level than before is re-frontiered and its
/// consumed edges are restored so the better level propagates.
void n_way_materialize(const EdgeView& view, const std::vector<PositionList>& lists, FiRuntimeState& state,
                       const TransitionGraphIndex& tgi);

/// Fragmented-incremental traversal driven by the transition graph index.
LevelMap fi_traverse(const PreparedConfig& pc, const EdgeColumnGroup& g, const TransitionGraphIndex& tgi,
                     TraversalCounters& counters);

}  // namespace colgraph

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "colgraph/traversal.hpp"

namespace colgraph {

/// Ascending edge positions matched in one scan.
using PositionList = std::vector<Position>;

/// Vertex working set. Stored as a bitset over vertex codes when it holds
/// more than |V|/64 vertices, as a sorted code list otherwise.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::vector<VertexCode> sorted_codes, std::size_t vertex_count);

  bool contains(VertexCode v) const noexcept;
  bool is_dense() const noexcept { return dense_.size() != 0; }
  bool empty() const noexcept { return codes_.empty(); }
  std::size_t size() const noexcept { return codes_.size(); }
  const std::vector<VertexCode>& codes() const noexcept { return codes_; }

 private:
  std::vector<VertexCode> codes_;
  Bitset dense_;
};

/// n contiguous slices of the scan domain (the concatenation of the scan
/// ranges), with sizes differing by at most one.
class ScanPartitioning {
 public:
  ScanPartitioning(std::size_t total, std::size_t partitions);

  std::size_t count() const noexcept { return bounds_.size() - 1; }
  std::size_t total() const noexcept { return bounds_.back(); }
  /// Slice [begin, end) of the scan domain owned by partition `p`.
  std::size_t begin(std::size_t p) const noexcept { return bounds_[p]; }
  std::size_t end(std::size_t p) const noexcept { return bounds_[p + 1]; }

 private:
  std::vector<std::size_t> bounds_;
};

std::size_t total_size(std::span<const PositionRange> ranges);

/// Parallel scan of the key column: returns every position i inside
/// `ranges` with ea[i] set and keys[i] in `working`, and clears ea[i] for each
/// returned position. One OpenMP task per partition; per-partition hit lists
/// are concatenated in partition order.
PositionList ls_scan(const EdgeView& view, const VertexSet& working, ActiveEdgeList& ea,
                     std::span<const PositionRange> ranges, const ScanPartitioning& part);

/// Single-threaded reference for ls_scan.
PositionList ls_scan_serial(const EdgeView& view, const VertexSet& working, ActiveEdgeList& ea,
                            std::span<const PositionRange> ranges);

/// Distinct value codes at the given positions, ascending.
std::vector<VertexCode> ls_materialize(const EdgeView& view, const PositionList& positions,
                                       std::size_t partitions = 1);

/// Level-synchronous traversal. Each iteration scans the full scan domain for
/// the current working set, materializes the targets, and keeps only vertices
/// seen for the first time as the next working set.
LevelMap ls_traverse(const PreparedConfig& pc, const EdgeColumnGroup& g, std::size_t partitions,
                     TraversalCounters& counters);

}  // namespace colgraph

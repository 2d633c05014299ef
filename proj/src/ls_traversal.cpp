#include "colgraph/ls_traversal.hpp"

#include <algorithm>

#include <omp.h>

namespace colgraph {

namespace {

// Calls fn(begin, end) for each physical position run covering the virtual
// slice [vbegin, vend) of the concatenated ranges.
template <typename Fn>
void for_each_segment(std::span<const PositionRange> ranges, std::size_t vbegin, std::size_t vend, Fn&& fn) {
  std::size_t offset = 0;
  for (const auto& r : ranges) {
    const std::size_t lo = std::max(vbegin, offset);
    const std::size_t hi = std::min(vend, offset + r.size());
    if (lo < hi) fn(r.begin + (lo - offset), r.begin + (hi - offset));
    offset += r.size();
    if (offset >= vend) break;
  }
}

}  // namespace

VertexSet::VertexSet(std::vector<VertexCode> sorted_codes, std::size_t vertex_count)
    : codes_(std::move(sorted_codes)) {
  if (codes_.size() > vertex_count / 64) {
    dense_ = Bitset(vertex_count);
    for (auto v : codes_) dense_.set(v);
  }
}

bool VertexSet::contains(VertexCode v) const noexcept {
  if (is_dense()) return dense_.test(v);
  return std::binary_search(codes_.begin(), codes_.end(), v);
}

ScanPartitioning::ScanPartitioning(std::size_t total, std::size_t partitions) {
  partitions = std::max<std::size_t>(partitions, 1);
  bounds_.resize(partitions + 1);
  const std::size_t base = total / partitions;
  const std::size_t extra = total % partitions;
  bounds_[0] = 0;
  for (std::size_t p = 0; p < partitions; ++p) bounds_[p + 1] = bounds_[p] + base + (p < extra ? 1 : 0);
}

std::size_t total_size(std::span<const PositionRange> ranges) {
  std::size_t n = 0;
  for (const auto& r : ranges) n += r.size();
  return n;
}

PositionList ls_scan(const EdgeView& view, const VertexSet& working, ActiveEdgeList& ea,
                     std::span<const PositionRange> ranges, const ScanPartitioning& part) {
  const auto n = static_cast<std::ptrdiff_t>(part.count());
  std::vector<PositionList> local(part.count());

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < n; ++p) {
    auto& hits = local[p];
    for_each_segment(ranges, part.begin(p), part.end(p), [&](Position begin, Position end) {
      // One atomic clear per word: only the boundary words are shared.
      std::size_t word = begin >> 6;
      std::uint64_t clear = 0;
      for (Position i = begin; i < end; ++i) {
        if ((i >> 6) != word) {
          if (clear) ea.atomic_clear_word(word, clear);
          word = i >> 6;
          clear = 0;
        }
        if (ea.atomic_test(i) && working.contains(view.keys[i])) {
          hits.push_back(i);
          clear |= std::uint64_t{1} << (i & 63);
        }
      }
      if (clear) ea.atomic_clear_word(word, clear);
    });
  }

  std::size_t total = 0;
  for (const auto& l : local) total += l.size();
  PositionList merged;
  merged.reserve(total);
  for (const auto& l : local) merged.insert(merged.end(), l.begin(), l.end());
  return merged;
}

PositionList ls_scan_serial(const EdgeView& view, const VertexSet& working, ActiveEdgeList& ea,
                            std::span<const PositionRange> ranges) {
  PositionList hits;
  for (const auto& r : ranges) {
    for (Position i = r.begin; i < r.end; ++i) {
      if (ea.test(i) && working.contains(view.keys[i])) {
        hits.push_back(i);
        ea.reset(i);
      }
    }
  }
  return hits;
}

std::vector<VertexCode> ls_materialize(const EdgeView& view, const PositionList& positions,
                                       std::size_t partitions) {
  const ScanPartitioning part(positions.size(), partitions);
  const auto n = static_cast<std::ptrdiff_t>(part.count());
  std::vector<std::vector<VertexCode>> local(part.count());

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < n; ++p) {
    auto& out = local[p];
    for (std::size_t k = part.begin(p); k < part.end(p); ++k) out.push_back(view.values[positions[k]]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }

  std::vector<VertexCode> merged;
  for (const auto& l : local) merged.insert(merged.end(), l.begin(), l.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

LevelMap ls_traverse(const PreparedConfig& pc, const EdgeColumnGroup& g, std::size_t partitions,
                     TraversalCounters& counters) {
  const std::size_t n = g.vertex_dictionary().size();
  const EdgeView view = edge_view(g, pc.direction);
  const ScanPartitioning part(total_size(pc.scan_ranges), partitions);
  ActiveEdgeList ea = pc.active_edges;

  LevelMap levels(n);
  for (auto s : pc.starts) levels.set(s, 0);
  VertexSet working(pc.starts, n);

  for (Depth level = 1; level <= pc.recurse; ++level) {
    if (working.empty()) break;
    const PositionList hits = ls_scan(view, working, ea, pc.scan_ranges, part);
    counters.edges_read += part.total();
    ++counters.iterations;

    std::vector<VertexCode> next;
    for (auto v : ls_materialize(view, hits, partitions)) {
      if (!levels.seen(v)) {
        levels.set(v, level);
        next.push_back(v);
      }
    }
    working = VertexSet(std::move(next), n);
    if (level == kInfiniteDepth - 1) break;
  }
  return levels;
}

}  // namespace colgraph

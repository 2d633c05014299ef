#pragma once

#include <cstddef>
#include <cstdint>

#include "colgraph/storage.hpp"

namespace colgraph {

/// Topology statistics consumed by the cost models.
struct GraphStats {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  double avg_outdegree = 0.0;
  std::size_t max_outdegree = 0;
  // Effective diameter: interpolated 90th percentile of sampled BFS
  // eccentricities (hops).
  double est_diameter = 0.0;
};

inline constexpr std::size_t kDefaultDiameterSamples = 64;

/// Exact counts plus a sampled effective-diameter estimate. When
/// `sample_size >= |V|` every vertex is a BFS source and the result does not
/// depend on `seed`.
GraphStats compute_stats(const EdgeColumnGroup& edges, const VertexColumnGroup& vertices,
                         std::size_t sample_size = kDefaultDiameterSamples, std::uint64_t seed = 1);

/// Percentile of `values` using rank p*(n+1) with linear interpolation
/// between neighbouring order statistics, clamped to [min, max].
double interpolated_percentile(std::vector<double> values, double p);

}  // namespace colgraph

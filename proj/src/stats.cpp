#include "colgraph/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace colgraph {

double interpolated_percentile(std::vector<double> values, double p) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const double rank = p * static_cast<double>(values.size() + 1);  // 1-based
  if (rank <= 1.0) return values.front();
  if (rank >= static_cast<double>(values.size())) return values.back();
  const auto lo = static_cast<std::size_t>(std::floor(rank));
  const double frac = rank - static_cast<double>(lo);
  return values[lo - 1] + frac * (values[lo] - values[lo - 1]);
}

GraphStats compute_stats(const EdgeColumnGroup& edges, const VertexColumnGroup& vertices,
                         std::size_t sample_size, std::uint64_t seed) {
  if (sample_size == 0) throw std::invalid_argument("compute_stats: sample_size must be >= 1");
  GraphStats s;
  s.vertex_count = vertices.size();
  s.edge_count = edges.size();
  if (s.vertex_count == 0) return s;

  const std::size_t n = s.vertex_count;
  std::vector<std::uint32_t> offsets(n + 1, 0);
  for (auto src : edges.source.codes) ++offsets[src + 1];
  for (std::size_t v = 0; v < n; ++v) {
    s.max_outdegree = std::max<std::size_t>(s.max_outdegree, offsets[v + 1]);
    offsets[v + 1] += offsets[v];
  }
  s.avg_outdegree = static_cast<double>(s.edge_count) / static_cast<double>(n);

  std::vector<VertexCode> adjacency(edges.size());
  {
    auto cursor = offsets;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      adjacency[cursor[edges.source.codes[i]]++] = edges.target.codes[i];
    }
  }

  std::vector<VertexCode> sources(n);
  std::iota(sources.begin(), sources.end(), VertexCode{0});
  if (sample_size < n) {
    std::mt19937_64 rng(seed);
    std::shuffle(sources.begin(), sources.end(), rng);
    sources.resize(sample_size);
  }

  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(n, kUnseen);
  std::vector<VertexCode> queue;
  queue.reserve(n);
  std::vector<double> eccentricities;
  eccentricities.reserve(sources.size());
  for (VertexCode root : sources) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    queue.clear();
    queue.push_back(root);
    dist[root] = 0;
    std::uint32_t ecc = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexCode u = queue[head];
      ecc = dist[u];
      for (auto k = offsets[u]; k < offsets[u + 1]; ++k) {
        VertexCode v = adjacency[k];
        if (dist[v] == kUnseen) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    eccentricities.push_back(ecc);
  }
  s.est_diameter = interpolated_percentile(std::move(eccentricities), 0.9);
  return s;
}

}  // namespace colgraph

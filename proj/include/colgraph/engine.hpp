#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "colgraph/cost_model.hpp"
#include "colgraph/stats.hpp"
#include "colgraph/storage.hpp"
#include "colgraph/tgi.hpp"
#include "colgraph/traversal.hpp"

namespace colgraph {

/// Encodes the start vertices and pushes the predicate down to the edge
/// group. Throws on c > r, unknown start ids and unknown attributes.
PreparedConfig prepare(const TraversalConfig& cfg, const EdgeColumnGroup& g);

struct ExecutionReport {
  OperatorKind op = OperatorKind::ls;
  double prepare_us = 0.0;
  double traverse_us = 0.0;
  double decode_us = 0.0;
  TraversalCounters counters;
  std::size_t result_size = 0;
  double cost_predicted = 0.0;  // cost of the chosen operator (0 for the oracle)
  double cost_ls = 0.0;
  double cost_fi = 0.0;
};

std::string to_json(const ExecutionReport& report);

struct TraversalResult {
  std::vector<std::string> vertices;  // ascending
  std::vector<VertexCode> codes;      // ascending
  ExecutionReport report;
};

/// Runs traversals over one immutable graph: prepare, pick an operator by
/// cost (or honour an override), traverse, generate the result, decode.
///
/// The transition graph index for each direction is built on first use;
/// concurrent traverse() calls are safe.
class TraversalEngine {
 public:
  struct Options {
    std::size_t partitions = 8;  // LS scan partitions
    FragmentSizePolicy fragment_policy = FragmentSizePolicy::fixed;
    std::size_t diameter_samples = kDefaultDiameterSamples;
    std::uint64_t seed = 1;
  };

  TraversalEngine(std::shared_ptr<const Graph> graph, CostParams cost, Options options);
  TraversalEngine(std::shared_ptr<const Graph> graph, GraphStats stats, CostParams cost, Options options);

  TraversalResult traverse(const TraversalConfig& cfg, std::optional<OperatorKind> force = std::nullopt) const;

  const TransitionGraphIndex& tgi(Direction d) const;
  const GraphStats& stats() const noexcept { return stats_; }
  const CostParams& cost_params() const noexcept { return cost_; }
  const Options& options() const noexcept { return options_; }
  const Graph& graph() const noexcept { return *graph_; }

 private:
  std::shared_ptr<const Graph> graph_;
  GraphStats stats_;
  CostParams cost_;
  Options options_;
  mutable std::array<std::once_flag, 2> tgi_once_;
  mutable std::array<TransitionGraphIndex, 2> tgi_;
};

}  // namespace colgraph

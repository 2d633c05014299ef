#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colgraph/cost_model.hpp"
#include "colgraph/generators.hpp"
#include "colgraph/stats.hpp"
#include "colgraph/tgi.hpp"
#include "colgraph/traversal.hpp"

namespace colgraph {

enum class Clustering { none, type, edge };

Clustering parse_clustering(const std::string& name);
const char* to_string(Clustering c);

/// Returns `g` with its edge group reorganized; `edge` implies type first.
Graph apply_clustering(Graph g, Clustering c);

struct BenchmarkSpec {
  std::string graph_file;                   // TSV edge file, or
  std::optional<GeneratorSpec> generator;   // synthetic graph
  Clustering clustering = Clustering::edge;

  // Query template. collect = nullopt means c = r ({s}, φ, k, k, d).
  std::size_t start_count = 0;  // distinct sampled starts; 0 = one per repetition
  std::string predicate = "*";
  std::optional<Depth> collect;
  Direction direction = Direction::forward;
  std::uint64_t seed = 1;

  std::size_t repetitions = 1;
  std::vector<Depth> recurse = {3};
  std::vector<std::size_t> fragment_sizes = {64};
  std::vector<double> false_positive_rates = {0.01};
  std::vector<OperatorKind> operators = {OperatorKind::ls, OperatorKind::fi};
  FragmentSizePolicy fragment_policy = FragmentSizePolicy::fixed;

  std::size_t partitions = 8;
  bool parallel_cells = false;
  std::size_t oracle_vertex_limit = 10000;  // cross-check results when |V| <= limit

  void validate() const;
};

BenchmarkSpec parse_benchmark_spec(const std::string& json_text);

struct CellRecord {
  std::size_t fragment_size = 0;
  double false_positive_rate = 0.0;
  OperatorKind op = OperatorKind::ls;
  Depth collect = 0;
  Depth recurse = 0;
  std::size_t runs = 0;
  double edges_read_mean = 0.0;
  double edges_read_median = 0.0;
  double fragments_read_mean = 0.0;
  double result_size_mean = 0.0;
  double iterations_mean = 0.0;
  std::size_t tgi_bytes = 0;
  std::size_t tgi_transitions = 0;
  double predicted_cost = 0.0;
  std::size_t oracle_checks = 0;
  double median_prepare_us = 0.0;
  double median_traverse_us = 0.0;
  double median_decode_us = 0.0;
  double mean_traverse_us = 0.0;
};

/// Goodness of fit of the FI cost model over the r axis of one (ξ, p) sweep.
struct CostFit {
  std::size_t fragment_size = 0;
  double false_positive_rate = 0.0;
  std::size_t points = 0;
  double r_squared = 0.0;  // squared Pearson correlation (least-squares fit)
};

struct BenchmarkReport {
  std::string graph_description;
  std::string layout;
  GraphStats stats;
  std::vector<VertexCode> starts;
  std::vector<CellRecord> cells;
  std::vector<CostFit> fits;
};

/// Runs every (ξ, p, operator, r) cell. Each cell executes `repetitions`
/// queries, repetition j starting from sampled start j mod start_count. When
/// |V| <= oracle_vertex_limit every result is compared with oracle_traverse
/// and a mismatch throws Error with a reproduction line.
BenchmarkReport run_benchmark(const BenchmarkSpec& spec);

/// Same, on an already loaded and clustered graph.
BenchmarkReport run_benchmark(const BenchmarkSpec& spec, const Graph& graph, const std::string& description);

/// Uniform sample (with replacement) of vertices with outdegree >= 1
/// (forward) or indegree >= 1 (backward).
std::vector<VertexCode> sample_start_vertices(const EdgeColumnGroup& g, Direction d, std::size_t count,
                                              std::uint64_t seed);

/// Coefficient of determination of the least-squares line through (x, y).
double r_squared(const std::vector<double>& x, const std::vector<double>& y);

double median(std::vector<double> values);

std::string to_csv(const BenchmarkReport& report);
std::string to_json(const BenchmarkReport& report);

}  // namespace colgraph

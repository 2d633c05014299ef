#include "colgraph/bench.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"

#include "colgraph/engine.hpp"
#include "colgraph/error.hpp"
#include "colgraph/graph_io.hpp"

namespace colgraph {

namespace {

using json = nlohmann::ordered_json;

Depth parse_depth(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInfiniteDepth;
    throw Error("depth must be a non-negative integer or \"inf\"");
  }
  return j.get<Depth>();
}

double mean(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(10);
  out << v;
  return out.str();
}

struct CellKey {
  std::size_t xi_index;
  std::size_t fpr_index;
  std::size_t op_index;
  std::size_t r_index;
};

}  // namespace

Clustering parse_clustering(const std::string& name) {
  if (name == "none") return Clustering::none;
  if (name == "type") return Clustering::type;
  if (name == "edge") return Clustering::edge;
  throw Error("unknown clustering '" + name + "' (expected none, type or edge)");
}

const char* to_string(Clustering c) {
  switch (c) {
    case Clustering::none: return "none";
    case Clustering::type: return "type";
    case Clustering::edge: return "edge";
  }
  return "?";
}

Graph apply_clustering(Graph g, Clustering c) {
  if (c == Clustering::none) return g;
  g.edges = cluster_by_type(g.edges);
  if (c == Clustering::edge) g.edges = cluster_by_edge(g.edges);
  return g;
}

void BenchmarkSpec::validate() const {
  if (graph_file.empty() == !generator.has_value()) throw Error("benchmark needs exactly one of graph file or generator");
  if (repetitions < 1) throw Error("repetitions must be >= 1");
  if (recurse.empty() || fragment_sizes.empty() || false_positive_rates.empty() || operators.empty()) {
    throw Error("sweep axes must be non-empty");
  }
  for (Depth r : recurse) {
    if (collect && *collect > r) throw Error("collection boundary exceeds recursion boundary " + depth_to_string(r));
  }
  for (auto xi : fragment_sizes) {
    if (xi < 1) throw Error("fragment size must be >= 1");
  }
  for (auto p : false_positive_rates) {
    if (!(p > 0.0 && p < 1.0)) throw Error("false positive rate must be in (0, 1)");
  }
}

BenchmarkSpec parse_benchmark_spec(const std::string& json_text) {
  const json j = json::parse(json_text);
  BenchmarkSpec s;
  const json& graph = j.at("graph");
  if (graph.contains("file")) s.graph_file = graph.at("file").get<std::string>();
  if (graph.contains("generator")) {
    GeneratorSpec g = parse_generator(graph.at("generator").get<std::string>());
    g.seed = graph.value("seed", std::uint64_t{1});
    g.type_count = graph.value("types", std::size_t{1});
    g.zipf_weights = graph.value("zipf_weights", false);
    s.generator = g;
  }
  s.clustering = parse_clustering(j.value("clustering", std::string("edge")));
  if (j.contains("query")) {
    const json& q = j.at("query");
    s.start_count = q.value("starts", std::size_t{0});
    s.predicate = q.value("predicate", std::string("*"));
    if (q.contains("collect") && !(q.at("collect").is_string() && q.at("collect").get<std::string>() == "r")) {
      s.collect = parse_depth(q.at("collect"));
    }
    const auto dir = q.value("direction", std::string("fwd"));
    if (dir != "fwd" && dir != "bwd") throw Error("direction must be fwd or bwd");
    s.direction = dir == "fwd" ? Direction::forward : Direction::backward;
    s.seed = q.value("seed", std::uint64_t{1});
  }
  s.repetitions = j.value("repetitions", std::size_t{1});
  if (j.contains("sweep")) {
    const json& sw = j.at("sweep");
    if (sw.contains("r")) {
      s.recurse.clear();
      for (const auto& r : sw.at("r")) s.recurse.push_back(parse_depth(r));
    }
    if (sw.contains("xi")) s.fragment_sizes = sw.at("xi").get<std::vector<std::size_t>>();
    if (sw.contains("fpr")) s.false_positive_rates = sw.at("fpr").get<std::vector<double>>();
    if (sw.contains("operators")) {
      s.operators.clear();
      for (const auto& op : sw.at("operators")) s.operators.push_back(parse_operator(op.get<std::string>()));
    }
  }
  const auto policy = j.value("fragment_policy", std::string("fixed"));
  if (policy == "fixed") s.fragment_policy = FragmentSizePolicy::fixed;
  else if (policy == "degree-adaptive") s.fragment_policy = FragmentSizePolicy::degree_adaptive;
  else throw Error("unknown fragment policy '" + policy + "'");
  s.partitions = j.value("partitions", std::size_t{8});
  s.parallel_cells = j.value("parallel_cells", false);
  s.oracle_vertex_limit = j.value("oracle_vertex_limit", std::size_t{10000});
  s.validate();
  return s;
}

std::vector<VertexCode> sample_start_vertices(const EdgeColumnGroup& g, Direction d, std::size_t count,
                                              std::uint64_t seed) {
  const auto keys = edge_view(g, d).keys;
  std::vector<VertexCode> eligible(keys.begin(), keys.end());
  std::sort(eligible.begin(), eligible.end());
  eligible.erase(std::unique(eligible.begin(), eligible.end()), eligible.end());
  std::vector<VertexCode> out;
  if (eligible.empty()) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
  for (std::size_t i = 0; i < count; ++i) out.push_back(eligible[pick(rng)]);
  return out;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

double r_squared(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return std::nan("");
  const double mx = mean(x), my = mean(y);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return std::nan("");
  return sxy * sxy / (sxx * syy);
}

BenchmarkReport run_benchmark(const BenchmarkSpec& spec) {
  spec.validate();
  Graph g = spec.generator ? generate_graph(*spec.generator) : load_graph(spec.graph_file);
  const std::string description = spec.generator ? to_string(*spec.generator) : spec.graph_file;
  g = apply_clustering(std::move(g), spec.clustering);
  return run_benchmark(spec, g, description);
}

BenchmarkReport run_benchmark(const BenchmarkSpec& spec, const Graph& graph, const std::string& description) {
  spec.validate();
  auto shared = std::make_shared<const Graph>(graph);
  const EdgeColumnGroup& edges = shared->edges;

  BenchmarkReport report;
  report.graph_description = description;
  report.layout = to_string(edges.layout);
  report.stats = compute_stats(edges, shared->vertices, kDefaultDiameterSamples, spec.seed);
  const std::size_t start_count = spec.start_count == 0 ? spec.repetitions : spec.start_count;
  report.starts = sample_start_vertices(edges, spec.direction, start_count, spec.seed);
  if (report.starts.empty()) throw Error("graph has no eligible start vertex");

  const Predicate predicate = parse_predicate(spec.predicate);
  check_attributes(predicate, edges);
  const bool check_oracle = shared->vertex_count() <= spec.oracle_vertex_limit;

  // One engine per (ξ, p); each shares the graph and the statistics.
  std::vector<std::unique_ptr<TraversalEngine>> engines;
  for (auto xi : spec.fragment_sizes) {
    for (auto p : spec.false_positive_rates) {
      TraversalEngine::Options opts;
      opts.partitions = spec.partitions;
      opts.fragment_policy = spec.fragment_policy;
      CostParams cp{1.0, p, xi};
      engines.push_back(std::make_unique<TraversalEngine>(shared, report.stats, cp, opts));
    }
  }

  auto make_config = [&](VertexCode start, Depth r) {
    TraversalConfig cfg;
    cfg.start_vertices = {edges.vertex_dictionary().decode(start)};
    cfg.predicate = predicate;
    cfg.recurse = r;
    cfg.collect = spec.collect.value_or(r);
    cfg.direction = spec.direction;
    return cfg;
  };

  // Oracle results per (start index, r index).
  std::map<std::pair<std::size_t, std::size_t>, std::vector<VertexCode>> expected;
  if (check_oracle) {
    for (std::size_t s = 0; s < report.starts.size(); ++s) {
      for (std::size_t ri = 0; ri < spec.recurse.size(); ++ri) {
        const PreparedConfig pc = prepare(make_config(report.starts[s], spec.recurse[ri]), edges);
        expected[{s, ri}] = oracle_traverse(pc, edges);
      }
    }
  }

  std::vector<CellKey> keys;
  for (std::size_t xi = 0; xi < spec.fragment_sizes.size(); ++xi) {
    for (std::size_t fp = 0; fp < spec.false_positive_rates.size(); ++fp) {
      for (std::size_t op = 0; op < spec.operators.size(); ++op) {
        for (std::size_t ri = 0; ri < spec.recurse.size(); ++ri) keys.push_back({xi, fp, op, ri});
      }
    }
  }
  // Build indexes up front so cells do not race on first use.
  for (const auto& e : engines) {
    if (std::find(spec.operators.begin(), spec.operators.end(), OperatorKind::fi) != spec.operators.end()) {
      e->tgi(spec.direction);
    }
  }

  report.cells.resize(keys.size());
  std::vector<std::string> failures(keys.size());
  const auto cell_count = static_cast<std::ptrdiff_t>(keys.size());

#pragma omp parallel for schedule(dynamic, 1) if (spec.parallel_cells)
  for (std::ptrdiff_t k = 0; k < cell_count; ++k) {
    try {
      const CellKey& key = keys[k];
      const TraversalEngine& engine = *engines[key.xi_index * spec.false_positive_rates.size() + key.fpr_index];
      const OperatorKind op = spec.operators[key.op_index];
      const Depth r = spec.recurse[key.r_index];
      CellRecord& cell = report.cells[k];
      cell.fragment_size = spec.fragment_sizes[key.xi_index];
      cell.false_positive_rate = spec.false_positive_rates[key.fpr_index];
      cell.op = op;
      cell.recurse = r;
      cell.collect = spec.collect.value_or(r);
      cell.runs = spec.repetitions;
      if (op == OperatorKind::fi) {
        const auto& tgi = engine.tgi(spec.direction);
        cell.tgi_bytes = tgi.total_bytes();
        cell.tgi_transitions = tgi.transition_count();
      }

      std::vector<double> edges_read, fragments, results, iterations, prep, trav, dec;
      for (std::size_t rep = 0; rep < spec.repetitions; ++rep) {
        const std::size_t s = rep % report.starts.size();
        const TraversalConfig cfg = make_config(report.starts[s], r);
        const TraversalResult res = engine.traverse(cfg, op);
        if (check_oracle) {
          ++cell.oracle_checks;
          if (res.codes != expected.at({s, key.r_index})) {
            throw Error("result mismatch against oracle: graph [" + description + "] layout " + report.layout +
                        " operator " + to_string(op) + " xi=" + std::to_string(cell.fragment_size) +
                        " p=" + fmt(cell.false_positive_rate) + " config ({" + cfg.start_vertices.front() + "}, '" +
                        spec.predicate + "', " + depth_to_string(cfg.collect) + ", " + depth_to_string(r) + ", " +
                        to_string(spec.direction) + ")");
          }
        }
        edges_read.push_back(static_cast<double>(res.report.counters.edges_read));
        fragments.push_back(static_cast<double>(res.report.counters.fragments_read));
        iterations.push_back(static_cast<double>(res.report.counters.iterations));
        results.push_back(static_cast<double>(res.report.result_size));
        prep.push_back(res.report.prepare_us);
        trav.push_back(res.report.traverse_us);
        dec.push_back(res.report.decode_us);
        if (rep == 0) cell.predicted_cost = res.report.cost_predicted;
      }
      cell.edges_read_mean = mean(edges_read);
      cell.edges_read_median = median(edges_read);
      cell.fragments_read_mean = mean(fragments);
      cell.iterations_mean = mean(iterations);
      cell.result_size_mean = mean(results);
      cell.median_prepare_us = median(prep);
      cell.median_traverse_us = median(trav);
      cell.median_decode_us = median(dec);
      cell.mean_traverse_us = mean(trav);
    } catch (const std::exception& e) {
      failures[k] = e.what();
    }
  }
  for (const auto& f : failures) {
    if (!f.empty()) throw Error(f);
  }

  for (std::size_t xi = 0; xi < spec.fragment_sizes.size(); ++xi) {
    for (std::size_t fp = 0; fp < spec.false_positive_rates.size(); ++fp) {
      std::vector<double> predicted, measured;
      for (const auto& c : report.cells) {
        if (c.op == OperatorKind::fi && c.fragment_size == spec.fragment_sizes[xi] &&
            c.false_positive_rate == spec.false_positive_rates[fp]) {
          predicted.push_back(c.predicted_cost);
          measured.push_back(c.edges_read_mean);
        }
      }
      if (predicted.empty()) continue;
      report.fits.push_back({spec.fragment_sizes[xi], spec.false_positive_rates[fp], predicted.size(),
                             r_squared(predicted, measured)});
    }
  }
  return report;
}

std::string to_csv(const BenchmarkReport& report) {
  std::ostringstream out;
  out << "fragment_size,fpr,operator,collect,recurse,runs,edges_read_mean,edges_read_median,fragments_read_mean,"
         "iterations_mean,result_size_mean,tgi_bytes,tgi_transitions,predicted_cost,oracle_checks,"
         "median_prepare_us,median_traverse_us,median_decode_us,mean_traverse_us\n";
  for (const auto& c : report.cells) {
    out << c.fragment_size << ',' << fmt(c.false_positive_rate) << ',' << to_string(c.op) << ','
        << depth_to_string(c.collect) << ',' << depth_to_string(c.recurse) << ',' << c.runs << ','
        << fmt(c.edges_read_mean) << ',' << fmt(c.edges_read_median) << ',' << fmt(c.fragments_read_mean) << ','
        << fmt(c.iterations_mean) << ',' << fmt(c.result_size_mean) << ',' << c.tgi_bytes << ','
        << c.tgi_transitions << ',' << fmt(c.predicted_cost) << ',' << c.oracle_checks << ','
        << fmt(c.median_prepare_us) << ',' << fmt(c.median_traverse_us) << ',' << fmt(c.median_decode_us) << ','
        << fmt(c.mean_traverse_us) << '\n';
  }
  return out.str();
}

std::string to_json(const BenchmarkReport& report) {
  json j;
  j["graph"] = report.graph_description;
  j["layout"] = report.layout;
  j["stats"] = {{"vertex_count", report.stats.vertex_count},
                {"edge_count", report.stats.edge_count},
                {"avg_outdegree", report.stats.avg_outdegree},
                {"max_outdegree", report.stats.max_outdegree},
                {"est_diameter", report.stats.est_diameter}};
  j["start_codes"] = report.starts;
  json cells = json::array();
  for (const auto& c : report.cells) {
    cells.push_back({{"fragment_size", c.fragment_size},
                     {"fpr", c.false_positive_rate},
                     {"operator", to_string(c.op)},
                     {"collect", depth_to_string(c.collect)},
                     {"recurse", depth_to_string(c.recurse)},
                     {"runs", c.runs},
                     {"edges_read_mean", c.edges_read_mean},
                     {"edges_read_median", c.edges_read_median},
                     {"fragments_read_mean", c.fragments_read_mean},
                     {"iterations_mean", c.iterations_mean},
                     {"result_size_mean", c.result_size_mean},
                     {"tgi_bytes", c.tgi_bytes},
                     {"tgi_transitions", c.tgi_transitions},
                     {"predicted_cost", c.predicted_cost},
                     {"oracle_checks", c.oracle_checks},
                     {"phase_times_us",
                      {{"prepare_median", c.median_prepare_us},
                       {"traverse_median", c.median_traverse_us},
                       {"decode_median", c.median_decode_us},
                       {"traverse_mean", c.mean_traverse_us}}}});
  }
  j["cells"] = std::move(cells);
  json fits = json::array();
  for (const auto& f : report.fits) {
    fits.push_back({{"fragment_size", f.fragment_size},
                    {"fpr", f.false_positive_rate},
                    {"points", f.points},
                    {"r_squared", std::isnan(f.r_squared) ? json(nullptr) : json(f.r_squared)}});
  }
  j["cost_fits"] = std::move(fits);
  return j.dump(2);
}

}  // namespace colgraph

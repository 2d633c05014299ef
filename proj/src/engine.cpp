#include "colgraph/engine.hpp"

#include <algorithm>
#include <chrono>

#include "json.hpp"

#include "colgraph/error.hpp"
#include "colgraph/fi_traversal.hpp"
#include "colgraph/ls_traversal.hpp"

namespace colgraph {

namespace {

using Clock = std::chrono::steady_clock;

double micros_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
}

}  // namespace

PreparedConfig prepare(const TraversalConfig& cfg, const EdgeColumnGroup& g) {
  if (cfg.collect > cfg.recurse) {
    throw Error("invalid traversal configuration: collection boundary " + depth_to_string(cfg.collect) +
                " exceeds recursion boundary " + depth_to_string(cfg.recurse));
  }
  PreparedConfig pc;
  const Dictionary& dict = g.vertex_dictionary();
  for (const auto& id : cfg.start_vertices) {
    auto code = dict.encode(id);
    if (!code) throw Error("unknown start vertex '" + id + "'");
    pc.starts.push_back(*code);
  }
  std::sort(pc.starts.begin(), pc.starts.end());
  pc.starts.erase(std::unique(pc.starts.begin(), pc.starts.end()), pc.starts.end());

  check_attributes(cfg.predicate, g);
  // Visibility is all-visible: the store has no transactional versions.
  pc.active_edges = evaluate(cfg.predicate, g);
  if (auto ranges = selected_type_ranges(cfg.predicate, g)) {
    pc.scan_ranges = std::move(*ranges);
  } else {
    pc.scan_ranges = {PositionRange{0, static_cast<Position>(g.size())}};
  }
  pc.collect = cfg.collect;
  pc.recurse = cfg.recurse;
  pc.direction = cfg.direction;
  return pc;
}

std::string to_json(const ExecutionReport& r) {
  nlohmann::ordered_json j;
  j["operator"] = to_string(r.op);
  j["phase_times_us"] = {{"prepare", r.prepare_us}, {"traverse", r.traverse_us}, {"decode", r.decode_us}};
  j["edges_read"] = r.counters.edges_read;
  j["fragments_read"] = r.counters.fragments_read;
  j["result_size"] = r.result_size;
  j["cost_predicted"] = r.cost_predicted;
  return j.dump(2);
}

TraversalEngine::TraversalEngine(std::shared_ptr<const Graph> graph, CostParams cost, Options options)
    : graph_(std::move(graph)), cost_(cost), options_(options) {
  cost_.validate();
  stats_ = compute_stats(graph_->edges, graph_->vertices, options_.diameter_samples, options_.seed);
}

TraversalEngine::TraversalEngine(std::shared_ptr<const Graph> graph, GraphStats stats, CostParams cost,
                                 Options options)
    : graph_(std::move(graph)), stats_(stats), cost_(cost), options_(options) {
  cost_.validate();
}

const TransitionGraphIndex& TraversalEngine::tgi(Direction d) const {
  const auto slot = static_cast<std::size_t>(d);
  std::call_once(tgi_once_[slot], [&] {
    TgiOptions opts;
    opts.policy = options_.fragment_policy;
    opts.fragment_size = cost_.fragment_size;
    opts.false_positive_rate = cost_.false_positive_rate;
    tgi_[slot] = build_tgi(graph_->edges, opts, d);
  });
  return tgi_[slot];
}

TraversalResult TraversalEngine::traverse(const TraversalConfig& cfg, std::optional<OperatorKind> force) const {
  const EdgeColumnGroup& g = graph_->edges;
  TraversalResult result;
  ExecutionReport& report = result.report;

  auto t0 = Clock::now();
  const PreparedConfig pc = prepare(cfg, g);
  report.prepare_us = micros_since(t0);

  report.cost_ls = cost_ls(cfg.recurse, stats_, cost_);
  report.cost_fi = cost_fi(cfg.recurse, stats_, cost_);
  report.op = force.value_or(choose_operator(cfg.recurse, stats_, cost_));

  if (report.op == OperatorKind::fi) tgi(cfg.direction);  // index build is not query time
  t0 = Clock::now();
  switch (report.op) {
    case OperatorKind::ls: {
      const LevelMap levels = ls_traverse(pc, g, options_.partitions, report.counters);
      result.codes = generate_result(levels, pc.collect, pc.recurse);
      report.cost_predicted = report.cost_ls;
      break;
    }
    case OperatorKind::fi: {
      const LevelMap levels = fi_traverse(pc, g, tgi(cfg.direction), report.counters);
      result.codes = generate_result(levels, pc.collect, pc.recurse);
      report.cost_predicted = report.cost_fi;
      break;
    }
    case OperatorKind::oracle:
      result.codes = oracle_traverse(pc, g);
      break;
  }
  report.traverse_us = micros_since(t0);

  t0 = Clock::now();
  result.vertices = decode(result.codes, g.vertex_dictionary());
  report.decode_us = micros_since(t0);
  report.result_size = result.codes.size();
  return result;
}

}  // namespace colgraph

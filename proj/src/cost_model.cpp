#include "colgraph/cost_model.hpp"

#include <algorithm>
#include <cmath>

#include "colgraph/error.hpp"

namespace colgraph {

namespace {

double effective_depth(Depth recurse, const GraphStats& stats) {
  if (recurse == kInfiniteDepth) return stats.est_diameter;
  return std::min(static_cast<double>(recurse), stats.est_diameter);
}

}  // namespace

void CostParams::validate() const {
  if (!(edge_read_cost > 0.0)) throw Error("edge read cost must be > 0");
  if (!(false_positive_rate > 0.0 && false_positive_rate < 1.0)) throw Error("false positive rate must be in (0, 1)");
  if (fragment_size < 1) throw Error("fragment size must be >= 1");
}

double cost_ls(Depth recurse, const GraphStats& stats, const CostParams& cp) {
  return effective_depth(recurse, stats) * static_cast<double>(stats.edge_count) * cp.edge_read_cost;
}

double cost_fi(Depth recurse, const GraphStats& stats, const CostParams& cp) {
  const auto upper = static_cast<long>(std::floor(effective_depth(recurse, stats)));
  double sum = 0.0;
  double term = 1.0;
  for (long i = 0; i <= upper; ++i) {
    sum += term;
    term *= stats.avg_outdegree;
  }
  return (1.0 + cp.false_positive_rate) * sum * static_cast<double>(cp.fragment_size) * cp.edge_read_cost;
}

const char* to_string(OperatorKind op) {
  switch (op) {
    case OperatorKind::ls: return "ls";
    case OperatorKind::fi: return "fi";
    case OperatorKind::oracle: return "oracle";
  }
  return "?";
}

OperatorKind parse_operator(const std::string& name) {
  if (name == "ls") return OperatorKind::ls;
  if (name == "fi") return OperatorKind::fi;
  if (name == "oracle") return OperatorKind::oracle;
  throw Error("unknown operator '" + name + "'");
}

OperatorKind choose_operator(Depth recurse, const GraphStats& stats, const CostParams& cp) {
  return cost_fi(recurse, stats, cp) < cost_ls(recurse, stats, cp) ? OperatorKind::fi : OperatorKind::ls;
}

}  // namespace colgraph

#pragma once

#include <cstddef>

#include "colgraph/stats.hpp"
#include "colgraph/traversal.hpp"

namespace colgraph {

struct CostParams {
  double edge_read_cost = 1.0;        // C_e, cost units per edge read
  double false_positive_rate = 0.01;  // p, average synopsis false-positive rate
  std::size_t fragment_size = 64;     // ξ

  void validate() const;
};

/// min(r, δ̃) · |E| · C_e. An infinite r collapses to δ̃.
double cost_ls(Depth recurse, const GraphStats& stats, const CostParams& cp);

/// Σ_{i=0}^{⌊min(r, δ̃)⌋} (1 + p) · d̄_out^i · ξ · C_e.
double cost_fi(Depth recurse, const GraphStats& stats, const CostParams& cp);

enum class OperatorKind { ls, fi, oracle };

const char* to_string(OperatorKind op);
OperatorKind parse_operator(const std::string& name);

/// Cheaper of LS and FI by the cost models; LS wins ties.
OperatorKind choose_operator(Depth recurse, const GraphStats& stats, const CostParams& cp);

}  // namespace colgraph

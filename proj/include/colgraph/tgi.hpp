#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "colgraph/bloom_filter.hpp"
#include "colgraph/traversal.hpp"

namespace colgraph {

using FragmentId = std::uint32_t;

enum class FragmentSizePolicy {
  fixed,            // every fragment holds exactly `fragment_size` records (last may be shorter)
  degree_adaptive,  // cut only between key groups, each fragment >= `fragment_size` records
};

const char* to_string(FragmentSizePolicy policy);

struct TgiOptions {
  FragmentSizePolicy policy = FragmentSizePolicy::fixed;
  std::size_t fragment_size = 64;  // ξ, or the minimum ξ for degree_adaptive
  double false_positive_rate = 0.01;
};

/// Contiguous slice of the edge columns plus a synopsis of its distinct keys.
struct Fragment {
  FragmentId id = 0;
  PositionRange range;
  BloomFilter synopsis;
  std::uint32_t distinct_keys = 0;
};

/// Transition graph over column fragments. F_a -> F_b exists iff some edge
/// (u, v) in F_a has v as a key in F_b. Successor sets are stored either as a
/// sorted id list or as a bitmap over all fragments, whichever is smaller.
class TransitionGraphIndex {
 public:
  TransitionGraphIndex() = default;

  const std::vector<Fragment>& fragments() const noexcept { return fragments_; }
  std::size_t fragment_count() const noexcept { return fragments_.size(); }
  const TgiOptions& options() const noexcept { return options_; }
  Direction direction() const noexcept { return direction_; }

  /// Successors of `from`, ascending.
  std::vector<FragmentId> successors(FragmentId from) const;
  bool has_transition(FragmentId from, FragmentId to) const;
  std::size_t transition_count() const noexcept { return transition_count_; }

  /// Fragment containing `position`.
  FragmentId fragment_of(Position position) const;

  std::size_t synopsis_bytes() const noexcept;
  std::size_t transition_bytes() const noexcept;
  std::size_t metadata_bytes() const noexcept;
  std::size_t total_bytes() const noexcept {
    return synopsis_bytes() + transition_bytes() + metadata_bytes();
  }

 private:
  struct Successors {
    std::vector<FragmentId> list;
    std::vector<std::uint64_t> bitmap;
  };

  friend TransitionGraphIndex build_tgi(const EdgeColumnGroup&, const TgiOptions&, Direction);

  TgiOptions options_;
  Direction direction_ = Direction::forward;
  std::vector<Fragment> fragments_;
  std::vector<Successors> successors_;
  std::size_t transition_count_ = 0;
};

/// Splits the edge columns into fragments, builds one synopsis per fragment
/// from its exact distinct key count, and computes the transitions exactly by
/// joining each fragment's value codes against the per-fragment key sets.
/// Keys are sources for forward traversal and targets for backward.
TransitionGraphIndex build_tgi(const EdgeColumnGroup& g, const TgiOptions& options,
                               Direction direction = Direction::forward);

/// Fragment boundaries only (no synopses or transitions).
std::vector<PositionRange> fragment_ranges(const EdgeColumnGroup& g, const TgiOptions& options,
                                           Direction direction = Direction::forward);

/// Memory summary of an index.
struct TgiReport {
  std::size_t fragment_count = 0;
  std::string size_policy;
  std::size_t fragment_size = 0;
  double false_positive_rate = 0.0;
  std::size_t total_synopsis_bytes = 0;
  std::size_t total_transition_count = 0;
  std::size_t transition_bytes = 0;
  std::size_t total_bytes = 0;
  std::size_t edge_column_bytes = 0;
  double bytes_ratio_vs_edge_columns = 0.0;
  std::string layout;
};

TgiReport make_tgi_report(const TransitionGraphIndex& tgi, const EdgeColumnGroup& g);
std::string to_json(const TgiReport& report);

}  // namespace colgraph

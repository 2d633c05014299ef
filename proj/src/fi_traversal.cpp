#include "colgraph/fi_traversal.hpp"

#include <algorithm>

#include "colgraph/error.hpp"

namespace colgraph {

void FragmentQueue::bump(FragmentId f) {
  auto& p = priority_[f];
  if (p != 0) order_.erase({p, f});
  ++p;
  order_.insert({p, f});
}

std::optional<FragmentId> FragmentQueue::pop() {
  if (order_.empty()) return std::nullopt;
  const FragmentId f = order_.begin()->second;
  order_.erase(order_.begin());
  priority_[f] = 0;
  return f;
}

FiRuntimeState::FiRuntimeState(const PreparedConfig& pc, std::size_t vertex_count, std::size_t fragment_count)
    : queue(fragment_count), frontiers(pc.starts), levels(vertex_count), recurse(pc.recurse), active(pc.active_edges) {
  for (auto s : pc.starts) levels.set(s, 0);
}

std::optional<FragmentId> get_next_fragment(FiRuntimeState& state, const TransitionGraphIndex& tgi) {
  if (!state.frontiers.empty()) {
    std::vector<FragmentId> candidates;
    if (state.chain.empty()) {
      candidates.resize(tgi.fragment_count());
      for (std::size_t f = 0; f < candidates.size(); ++f) candidates[f] = static_cast<FragmentId>(f);
    } else {
      candidates = tgi.successors(state.chain.back());
    }
    for (FragmentId cand : candidates) {
      const BloomFilter& synopsis = tgi.fragments()[cand].synopsis;
      for (VertexCode v : state.frontiers) {
        if (synopsis.might_contain(v) &&
            state.invalidation.insert(FiRuntimeState::invalidation_key(cand, v)).second) {
          state.queue.bump(cand);
        }
      }
    }
    state.frontiers.clear();
  }
  if (!state.requeue.empty()) {
    std::sort(state.requeue.begin(), state.requeue.end());
    state.requeue.erase(std::unique(state.requeue.begin(), state.requeue.end()), state.requeue.end());
    for (FragmentId f : state.requeue) state.queue.bump(f);
    state.requeue.clear();
  }
  auto next = state.queue.pop();
  if (next) state.chain.push_back(*next);
  return next;
}

std::vector<PositionList> n_way_scan(const EdgeView& view, const Fragment& fragment, FiRuntimeState& state) {
  std::vector<PositionList> lists(1);
  for (Position i = fragment.range.begin; i < fragment.range.end; ++i) {
    if (!state.active.test(i)) continue;
    const VertexCode key = view.keys[i];
    const Depth level = state.levels.level(key);
    if (level == LevelMap::kUnseen || level >= state.s_factor) continue;
    const std::size_t next = static_cast<std::size_t>(level) + 1;
    if (lists.size() <= next) lists.resize(next + 1);
    lists[next].push_back(i);
    state.active.reset(i);
    state.consumed[key].push_back(i);
  }
  state.counters.edges_read += fragment.range.size();
  ++state.counters.fragments_read;
  return lists;
}

void n_way_materialize(const EdgeView& view, const std::vector<PositionList>& lists, FiRuntimeState& state,
                       const TransitionGraphIndex& tgi) {
  const std::size_t limit = std::min(state.m_factor, state.recurse);
  for (std::size_t level = 1; level < lists.size() && level <= limit; ++level) {
    const auto depth = static_cast<Depth>(level);
    for (Position pos : lists[level]) {
      const VertexCode v = view.values[pos];
      const Depth current = state.levels.level(v);
      if (current <= depth) continue;
      state.levels.set(v, depth);
      state.frontiers.push_back(v);
      if (current == LevelMap::kUnseen) continue;
      // Level improved: edges of v consumed at the worse level must be read again.
      auto it = state.consumed.find(v);
      if (it == state.consumed.end()) continue;
      for (Position p : it->second) {
        state.active.set(p);
        state.requeue.push_back(tgi.fragment_of(p));
      }
      state.consumed.erase(it);
    }
  }
}

LevelMap fi_traverse(const PreparedConfig& pc, const EdgeColumnGroup& g, const TransitionGraphIndex& tgi,
                     TraversalCounters& counters) {
  if (tgi.direction() != pc.direction) throw Error("transition graph index built for the other direction");
  if (!tgi.fragments().empty() && tgi.fragments().back().range.end != g.size()) {
    throw Error("transition graph index does not match the edge group");
  }
  const EdgeView view = edge_view(g, pc.direction);
  FiRuntimeState state(pc, g.vertex_dictionary().size(), tgi.fragment_count());

  while (auto f = get_next_fragment(state, tgi)) {
    const auto lists = n_way_scan(view, tgi.fragments()[*f], state);
    n_way_materialize(view, lists, state, tgi);
    if (state.s_factor <= state.recurse && state.s_factor != kInfiniteDepth) ++state.s_factor;
    if (state.m_factor < state.recurse) ++state.m_factor;
    ++state.counters.iterations;
  }

  counters.edges_read += state.counters.edges_read;
  counters.fragments_read += state.counters.fragments_read;
  counters.iterations += state.counters.iterations;
  return std::move(state.levels);
}

}  // namespace colgraph

#include "colgraph/traversal.hpp"

#include <algorithm>
#include <stdexcept>

namespace colgraph {

const char* to_string(Direction d) { return d == Direction::forward ? "fwd" : "bwd"; }

std::string depth_to_string(Depth d) { return d == kInfiniteDepth ? "inf" : std::to_string(d); }

EdgeView edge_view(const EdgeColumnGroup& g, Direction d) {
  if (d == Direction::forward) return {g.source.codes, g.target.codes};
  return {g.target.codes, g.source.codes};
}

std::vector<VertexCode> generate_result(const LevelMap& levels, Depth collect, Depth recurse) {
  std::vector<VertexCode> out;
  const auto lv = levels.levels();
  for (std::size_t v = 0; v < lv.size(); ++v) {
    if (lv[v] != LevelMap::kUnseen && lv[v] >= collect && lv[v] <= recurse) {
      out.push_back(static_cast<VertexCode>(v));
    }
  }
  return out;
}

std::vector<std::string> decode(std::span<const VertexCode> codes, const Dictionary& dict) {
  std::vector<std::string> out;
  out.reserve(codes.size());
  for (auto c : codes) out.push_back(dict.decode(c));
  return out;
}

std::vector<VertexCode> oracle_traverse(const PreparedConfig& pc, const EdgeColumnGroup& g) {
  const std::size_t n = g.vertex_dictionary().size();
  const EdgeView view = edge_view(g, pc.direction);

  std::vector<char> current(n, 0), visited(n, 0), target(n, 0), everything(n, 0);
  for (auto s : pc.starts) current[s] = 1;

  auto absorb = [&](Depth level) {
    bool grew = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!current[v]) continue;
      if (level < pc.collect) visited[v] = 1;
      else target[v] = 1;
      if (!everything[v]) grew = true;
      everything[v] = 1;
    }
    return grew;
  };

  bool nonempty = !pc.starts.empty();
  bool grew = absorb(0);
  for (Depth level = 1; nonempty && grew && level <= pc.recurse; ++level) {
    std::vector<char> next(n, 0);
    nonempty = false;
    for (std::size_t i = 0; i < view.size(); ++i) {
      if (pc.active_edges.test(i) && current[view.keys[i]]) {
        next[view.values[i]] = 1;
        nonempty = true;
      }
    }
    current.swap(next);
    grew = absorb(level);
    if (level == kInfiniteDepth - 1) break;
  }

  std::vector<VertexCode> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (target[v] && !visited[v]) out.push_back(static_cast<VertexCode>(v));
  }
  return out;
}

}  // namespace colgraph

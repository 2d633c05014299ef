#include "colgraph/tgi.hpp"

#include <algorithm>
#include <bit>

#include "json.hpp"

#include "colgraph/error.hpp"

namespace colgraph {

const char* to_string(FragmentSizePolicy policy) {
  return policy == FragmentSizePolicy::fixed ? "fixed" : "degree-adaptive";
}

std::vector<FragmentId> TransitionGraphIndex::successors(FragmentId from) const {
  const auto& s = successors_[from];
  if (s.bitmap.empty()) return s.list;
  std::vector<FragmentId> out;
  for (std::size_t w = 0; w < s.bitmap.size(); ++w) {
    for (auto bits = s.bitmap[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<FragmentId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
    }
  }
  return out;
}

bool TransitionGraphIndex::has_transition(FragmentId from, FragmentId to) const {
  const auto& s = successors_[from];
  if (s.bitmap.empty()) return std::binary_search(s.list.begin(), s.list.end(), to);
  return (s.bitmap[to >> 6] >> (to & 63)) & 1U;
}

FragmentId TransitionGraphIndex::fragment_of(Position position) const {
  auto it = std::upper_bound(fragments_.begin(), fragments_.end(), position,
                             [](Position p, const Fragment& f) { return p < f.range.end; });
  return it->id;
}

std::size_t TransitionGraphIndex::synopsis_bytes() const noexcept {
  std::size_t n = 0;
  for (const auto& f : fragments_) n += f.synopsis.byte_size();
  return n;
}

std::size_t TransitionGraphIndex::transition_bytes() const noexcept {
  std::size_t n = 0;
  for (const auto& s : successors_) n += s.list.size() * sizeof(FragmentId) + s.bitmap.size() * sizeof(std::uint64_t);
  return n;
}

std::size_t TransitionGraphIndex::metadata_bytes() const noexcept {
  // Per fragment: range (2 x 4), synopsis shape (4 + 1), successor offset and
  // encoding tag (4 + 1).
  return fragments_.size() * 18;
}

std::vector<PositionRange> fragment_ranges(const EdgeColumnGroup& g, const TgiOptions& options,
                                           Direction direction) {
  if (options.fragment_size == 0) throw Error("fragment size must be >= 1");
  const auto n = static_cast<Position>(g.size());
  std::vector<PositionRange> ranges;
  if (options.policy == FragmentSizePolicy::fixed) {
    for (Position b = 0; b < n; b += static_cast<Position>(std::min<std::size_t>(options.fragment_size, n - b))) {
      ranges.push_back({b, static_cast<Position>(std::min<std::size_t>(b + options.fragment_size, n))});
    }
    return ranges;
  }
  if (g.layout != EdgeLayout::type_then_edge_clustered) {
    throw Error("degree-adaptive fragments require an edge-clustered layout");
  }
  const auto keys = edge_view(g, direction).keys;
  Position begin = 0;
  for (Position i = 0; i < n;) {
    Position j = i + 1;
    while (j < n && keys[j] == keys[i]) ++j;
    if (j - begin >= options.fragment_size) {
      ranges.push_back({begin, j});
      begin = j;
    }
    i = j;
  }
  if (begin < n) ranges.push_back({begin, n});
  return ranges;
}

TransitionGraphIndex build_tgi(const EdgeColumnGroup& g, const TgiOptions& options, Direction direction) {
  TransitionGraphIndex tgi;
  tgi.options_ = options;
  tgi.direction_ = direction;
  const auto ranges = fragment_ranges(g, options, direction);
  const EdgeView view = edge_view(g, direction);
  const std::size_t fcount = ranges.size();
  const std::size_t vcount = g.vertex_dictionary().size();

  tgi.fragments_.resize(fcount);
  std::vector<std::vector<VertexCode>> distinct_keys(fcount);
  const auto nf = static_cast<std::ptrdiff_t>(fcount);

#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t f = 0; f < nf; ++f) {
    const auto& r = ranges[f];
    auto& keys = distinct_keys[f];
    keys.assign(view.keys.begin() + r.begin, view.keys.begin() + r.end);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    Fragment& frag = tgi.fragments_[f];
    frag.id = static_cast<FragmentId>(f);
    frag.range = r;
    frag.distinct_keys = static_cast<std::uint32_t>(keys.size());
    frag.synopsis = BloomFilter::for_capacity(keys.size(), options.false_positive_rate);
    for (auto k : keys) frag.synopsis.insert(k);
  }

  // Inverted index: key -> fragments holding it (ascending), in CSR form.
  std::vector<std::uint32_t> offsets(vcount + 1, 0);
  for (const auto& keys : distinct_keys) {
    for (auto k : keys) ++offsets[k + 1];
  }
  for (std::size_t v = 0; v < vcount; ++v) offsets[v + 1] += offsets[v];
  std::vector<FragmentId> holders(offsets.back());
  {
    auto cursor = offsets;
    for (std::size_t f = 0; f < fcount; ++f) {
      for (auto k : distinct_keys[f]) holders[cursor[k]++] = static_cast<FragmentId>(f);
    }
  }
  distinct_keys.clear();

  tgi.successors_.resize(fcount);
  const std::size_t bitmap_words = (fcount + 63) / 64;
  std::size_t transitions = 0;

#pragma omp parallel for schedule(dynamic, 64) reduction(+ : transitions)
  for (std::ptrdiff_t f = 0; f < nf; ++f) {
    const auto& r = ranges[f];
    std::vector<VertexCode> values(view.values.begin() + r.begin, view.values.begin() + r.end);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<FragmentId> succ;
    for (auto v : values) succ.insert(succ.end(), holders.begin() + offsets[v], holders.begin() + offsets[v + 1]);
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    transitions += succ.size();

    auto& out = tgi.successors_[f];
    if (succ.size() * sizeof(FragmentId) <= bitmap_words * sizeof(std::uint64_t)) {
      out.list = std::move(succ);
    } else {
      out.bitmap.assign(bitmap_words, 0);
      for (auto s : succ) out.bitmap[s >> 6] |= std::uint64_t{1} << (s & 63);
    }
  }
  tgi.transition_count_ = transitions;
  return tgi;
}

TgiReport make_tgi_report(const TransitionGraphIndex& tgi, const EdgeColumnGroup& g) {
  TgiReport r;
  r.fragment_count = tgi.fragment_count();
  r.size_policy = to_string(tgi.options().policy);
  r.fragment_size = tgi.options().fragment_size;
  r.false_positive_rate = tgi.options().false_positive_rate;
  r.total_synopsis_bytes = tgi.synopsis_bytes();
  r.total_transition_count = tgi.transition_count();
  r.transition_bytes = tgi.transition_bytes();
  r.total_bytes = tgi.total_bytes();
  r.edge_column_bytes = 2 * g.size() * sizeof(VertexCode);
  r.bytes_ratio_vs_edge_columns =
      r.edge_column_bytes == 0 ? 0.0 : static_cast<double>(r.total_bytes) / static_cast<double>(r.edge_column_bytes);
  r.layout = to_string(g.layout);
  return r;
}

std::string to_json(const TgiReport& r) {
  nlohmann::ordered_json j;
  j["fragment_count"] = r.fragment_count;
  j["size_policy"] = r.size_policy;
  j["fragment_size"] = r.fragment_size;
  j["p"] = r.false_positive_rate;
  j["total_synopsis_bytes"] = r.total_synopsis_bytes;
  j["total_transition_count"] = r.total_transition_count;
  j["transition_bytes"] = r.transition_bytes;
  j["total_bytes"] = r.total_bytes;
  j["edge_column_bytes"] = r.edge_column_bytes;
  j["bytes_ratio_vs_edge_columns"] = r.bytes_ratio_vs_edge_columns;
  j["layout"] = r.layout;
  return j.dump(2);
}

}  // namespace colgraph

#include "colgraph/storage.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "colgraph/error.hpp"

namespace colgraph {

namespace {

// Collects one optional value per record for every attribute name seen.
using AttributeCells = std::map<std::string, std::vector<std::optional<std::string>>>;

template <typename Record>
AttributeCells gather_attributes(std::span<const Record> records) {
  AttributeCells cells;
  for (const auto& rec : records) {
    for (const auto& [name, value] : rec.attributes) cells.try_emplace(name);
  }
  for (auto& [name, column] : cells) column.resize(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (const auto& [name, value] : records[i].attributes) cells[name][i] = value;
  }
  return cells;
}

Column encode_column(const std::vector<std::optional<std::string>>& cells) {
  std::vector<std::string> distinct;
  bool any_null = false;
  for (const auto& c : cells) {
    if (c) distinct.push_back(*c);
    else any_null = true;
  }
  Column col;
  col.dictionary = std::make_shared<const Dictionary>(Dictionary::from_values(std::move(distinct)));
  col.codes.resize(cells.size(), 0);
  if (any_null) col.present = Bitset(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cells[i]) continue;
    col.codes[i] = *col.dictionary->encode(*cells[i]);
    if (any_null) col.present.set(i);
  }
  return col;
}

std::map<std::string, Column> encode_attributes(const AttributeCells& cells) {
  std::map<std::string, Column> out;
  for (const auto& [name, column] : cells) out.emplace(name, encode_column(column));
  return out;
}

Column permute_column(const Column& c, std::span<const Position> order) {
  Column out;
  out.dictionary = c.dictionary;
  out.codes.resize(order.size());
  if (c.has_nulls()) out.present = Bitset(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.codes[i] = c.codes[order[i]];
    if (c.has_nulls() && c.present.test(order[i])) out.present.set(i);
  }
  return out;
}

}  // namespace

const char* to_string(EdgeLayout layout) {
  switch (layout) {
    case EdgeLayout::unclustered: return "unclustered";
    case EdgeLayout::type_clustered: return "type-clustered";
    case EdgeLayout::type_then_edge_clustered: return "type-then-edge-clustered";
  }
  return "?";
}

const Column* EdgeColumnGroup::attribute(const std::string& name) const {
  auto it = attributes.find(name);
  return it == attributes.end() ? nullptr : &it->second;
}

Graph build_graph(std::span<const VertexRecord> vertices, std::span<const EdgeRecord> edges) {
  std::vector<std::string> ids;
  ids.reserve(vertices.size());
  {
    std::unordered_set<std::string_view> seen;
    for (const auto& v : vertices) {
      if (!seen.insert(v.id).second) throw Error("duplicate vertex id '" + v.id + "'");
      ids.push_back(v.id);
    }
  }
  auto dict = std::make_shared<const Dictionary>(Dictionary::from_values(ids));

  Graph g;
  g.vertices.id.dictionary = dict;
  g.vertices.id.codes.reserve(vertices.size());
  for (const auto& v : vertices) g.vertices.id.codes.push_back(*dict->encode(v.id));
  g.vertices.attributes = encode_attributes(gather_attributes(vertices));

  auto& e = g.edges;
  e.source.dictionary = dict;
  e.target.dictionary = dict;
  e.source.codes.reserve(edges.size());
  e.target.codes.reserve(edges.size());
  for (const auto& rec : edges) {
    auto s = dict->encode(rec.source);
    if (!s) throw Error("edge references unknown vertex '" + rec.source + "'");
    auto t = dict->encode(rec.target);
    if (!t) throw Error("edge references unknown vertex '" + rec.target + "'");
    e.source.codes.push_back(*s);
    e.target.codes.push_back(*t);
  }
  e.attributes = encode_attributes(gather_attributes(edges));
  e.layout = EdgeLayout::unclustered;
  return g;
}

Graph build_graph_from_edges(std::span<const EdgeRecord> edges) {
  std::vector<VertexRecord> vertices;
  std::unordered_set<std::string_view> seen;
  for (const auto& e : edges) {
    for (const std::string* id : {&e.source, &e.target}) {
      if (seen.insert(*id).second) vertices.push_back({*id, {}});
    }
  }
  return build_graph(vertices, edges);
}

EdgeColumnGroup permute_records(const EdgeColumnGroup& g, std::span<const Position> order) {
  EdgeColumnGroup out;
  out.source = permute_column(g.source, order);
  out.target = permute_column(g.target, order);
  for (const auto& [name, col] : g.attributes) out.attributes.emplace(name, permute_column(col, order));
  out.layout = EdgeLayout::unclustered;
  return out;
}

EdgeColumnGroup cluster_by_type(const EdgeColumnGroup& g) {
  const Column* type = g.attribute(kTypeAttribute);
  if (type == nullptr && g.size() == 0) {
    EdgeColumnGroup out = g;
    out.layout = EdgeLayout::type_clustered;
    return out;
  }
  if (type == nullptr) throw Error("cannot cluster by type: edge group has no 'type' column");
  if (type->has_nulls() && type->present.count() != type->size()) {
    throw Error("cannot cluster by type: 'type' column contains nulls");
  }
  std::vector<Position> order(g.size());
  std::iota(order.begin(), order.end(), Position{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Position a, Position b) { return type->codes[a] < type->codes[b]; });

  EdgeColumnGroup out = permute_records(g, order);
  out.layout = EdgeLayout::type_clustered;
  const auto& codes = out.attributes.at(kTypeAttribute).codes;
  for (Position i = 0; i < codes.size();) {
    Position j = i;
    while (j < codes.size() && codes[j] == codes[i]) ++j;
    out.type_ranges.emplace(codes[i], PositionRange{i, j});
    i = j;
  }
  return out;
}

EdgeColumnGroup cluster_by_edge(const EdgeColumnGroup& g) {
  if (g.layout == EdgeLayout::unclustered) {
    throw Error("cannot cluster by edge: cluster the edge group by type first");
  }
  std::vector<Position> order(g.size());
  std::iota(order.begin(), order.end(), Position{0});
  for (const auto& [type, range] : g.type_ranges) {
    std::stable_sort(order.begin() + range.begin, order.begin() + range.end,
                     [&](Position a, Position b) { return g.source.codes[a] < g.source.codes[b]; });
  }
  EdgeColumnGroup out = permute_records(g, order);
  out.layout = EdgeLayout::type_then_edge_clustered;
  out.type_ranges = g.type_ranges;
  return out;
}

EdgeRecord record_at(const EdgeColumnGroup& g, std::size_t position) {
  EdgeRecord rec;
  rec.source = g.vertex_dictionary().decode(g.source.codes[position]);
  rec.target = g.vertex_dictionary().decode(g.target.codes[position]);
  for (const auto& [name, col] : g.attributes) {
    if (auto code = col.code_at(position)) rec.attributes.emplace_back(name, col.dictionary->decode(*code));
  }
  return rec;
}

}  // namespace colgraph

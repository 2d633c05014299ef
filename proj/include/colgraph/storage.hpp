#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "colgraph/bitset.hpp"
#include "colgraph/dictionary.hpp"

namespace colgraph {

using Position = std::uint32_t;
using VertexCode = ValueCode;

inline constexpr const char* kTypeAttribute = "type";

/// Half-open interval of record positions.
struct PositionRange {
  Position begin = 0;
  Position end = 0;

  std::size_t size() const noexcept { return end - begin; }
  bool empty() const noexcept { return begin == end; }
  friend bool operator==(const PositionRange&, const PositionRange&) = default;
};

/// Dictionary-encoded column. `present` is empty when the column has no nulls.
struct Column {
  std::shared_ptr<const Dictionary> dictionary;
  std::vector<ValueCode> codes;
  Bitset present;

  std::size_t size() const noexcept { return codes.size(); }
  bool has_nulls() const noexcept { return present.size() != 0; }
  bool is_null(std::size_t i) const noexcept { return has_nulls() && !present.test(i); }
  std::optional<ValueCode> code_at(std::size_t i) const {
    if (is_null(i)) return std::nullopt;
    return codes[i];
  }

  friend bool operator==(const Column& a, const Column& b) {
    return a.codes == b.codes && a.present == b.present &&
           (a.dictionary == b.dictionary ||
            (a.dictionary && b.dictionary && a.dictionary->values() == b.dictionary->values()));
  }
};

struct VertexColumnGroup {
  Column id;
  std::map<std::string, Column> attributes;

  std::size_t size() const noexcept { return id.size(); }
};

enum class EdgeLayout { unclustered, type_clustered, type_then_edge_clustered };

const char* to_string(EdgeLayout layout);

/// Columnar edge storage. `source` and `target` share one vertex dictionary.
struct EdgeColumnGroup {
  Column source;
  Column target;
  std::map<std::string, Column> attributes;
  EdgeLayout layout = EdgeLayout::unclustered;
  // Populated iff layout != unclustered.
  std::map<ValueCode, PositionRange> type_ranges;

  std::size_t size() const noexcept { return source.size(); }
  const Dictionary& vertex_dictionary() const { return *source.dictionary; }
  const Column* attribute(const std::string& name) const;

  friend bool operator==(const EdgeColumnGroup&, const EdgeColumnGroup&) = default;
};

struct Graph {
  VertexColumnGroup vertices;
  EdgeColumnGroup edges;

  std::size_t vertex_count() const noexcept { return vertices.size(); }
  std::size_t edge_count() const noexcept { return edges.size(); }
};

using AttributeList = std::vector<std::pair<std::string, std::string>>;

struct VertexRecord {
  std::string id;
  AttributeList attributes;
};

struct EdgeRecord {
  std::string source;
  std::string target;
  AttributeList attributes;
};

/// Builds both column groups in input order (unclustered layout). The vertex
/// dictionary covers every vertex id and is shared by the source and target
/// columns.
Graph build_graph(std::span<const VertexRecord> vertices, std::span<const EdgeRecord> edges);

/// Convenience overload: vertices are the distinct edge endpoints.
Graph build_graph_from_edges(std::span<const EdgeRecord> edges);

/// Stable regrouping of records by type code; populates type_ranges.
EdgeColumnGroup cluster_by_type(const EdgeColumnGroup& g);

/// Stable sort by source code within each type range. Requires a
/// type-clustered input.
EdgeColumnGroup cluster_by_edge(const EdgeColumnGroup& g);

/// Applies `order` (new position -> old position) to every column.
EdgeColumnGroup permute_records(const EdgeColumnGroup& g, std::span<const Position> order);

/// Decoded view of one edge record, mainly for tests and file output.
EdgeRecord record_at(const EdgeColumnGroup& g, std::size_t position);

}  // namespace colgraph

#pragma once

#include <iosfwd>
#include <string>

#include "colgraph/storage.hpp"

namespace colgraph {

/// Reads the edge TSV format:
///
///   source_id <TAB> target_id <TAB> type [<TAB> key=value]*
///
/// and, optionally, a vertex file with lines `id [<TAB> key=value]*`. Lines
/// starting with '#' and blank lines are skipped. Without a vertex file the
/// vertex set is the set of edge endpoints. Errors carry the line number.
Graph read_graph_tsv(std::istream& edges, std::istream* vertices = nullptr);

Graph load_graph(const std::string& edge_path, const std::string& vertex_path = "");

/// Writes the edge group in physical record order.
void write_graph_tsv(std::ostream& out, const EdgeColumnGroup& g);

}  // namespace colgraph

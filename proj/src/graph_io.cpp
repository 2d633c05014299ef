#include "colgraph/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "colgraph/error.hpp"

namespace colgraph {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) return fields;
    start = tab + 1;
  }
}

void parse_key_values(std::span<const std::string_view> fields, AttributeList& out, std::size_t line_no) {
  for (auto f : fields) {
    const auto eq = f.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw LoadError("expected key=value, got '" + std::string(f) + "'", line_no);
    }
    out.emplace_back(std::string(f.substr(0, eq)), std::string(f.substr(eq + 1)));
  }
}

// Returns false for comment and blank lines.
bool next_record(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_graph_tsv(std::istream& edges, std::istream* vertices) {
  std::string line;
  std::vector<EdgeRecord> edge_records;
  std::size_t line_no = 0;
  while (next_record(edges, line, line_no)) {
    const auto fields = split_tabs(line);
    if (fields.size() < 3) throw LoadError("expected source, target and type fields", line_no);
    if (fields[0].empty() || fields[1].empty()) throw LoadError("empty vertex id", line_no);
    if (fields[2].empty()) throw LoadError("empty edge type", line_no);
    EdgeRecord rec{std::string(fields[0]), std::string(fields[1]), {{kTypeAttribute, std::string(fields[2])}}};
    parse_key_values(std::span(fields).subspan(3), rec.attributes, line_no);
    edge_records.push_back(std::move(rec));
  }
  if (vertices == nullptr) return build_graph_from_edges(edge_records);

  std::vector<VertexRecord> vertex_records;
  line_no = 0;
  while (next_record(*vertices, line, line_no)) {
    const auto fields = split_tabs(line);
    if (fields[0].empty()) throw LoadError("empty vertex id", line_no);
    VertexRecord rec{std::string(fields[0]), {}};
    parse_key_values(std::span(fields).subspan(1), rec.attributes, line_no);
    vertex_records.push_back(std::move(rec));
  }
  return build_graph(vertex_records, edge_records);
}

Graph load_graph(const std::string& edge_path, const std::string& vertex_path) {
  std::ifstream edges(edge_path);
  if (!edges) throw Error("cannot open '" + edge_path + "'");
  if (vertex_path.empty()) return read_graph_tsv(edges);
  std::ifstream vertices(vertex_path);
  if (!vertices) throw Error("cannot open '" + vertex_path + "'");
  return read_graph_tsv(edges, &vertices);
}

void write_graph_tsv(std::ostream& out, const EdgeColumnGroup& g) {
  const Column* type = g.attribute(kTypeAttribute);
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << g.vertex_dictionary().decode(g.source.codes[i]) << '\t' << g.vertex_dictionary().decode(g.target.codes[i])
        << '\t';
    if (type && !type->is_null(i)) out << type->dictionary->decode(type->codes[i]);
    else out << '-';
    for (const auto& [name, col] : g.attributes) {
      if (name == kTypeAttribute || col.is_null(i)) continue;
      out << '\t' << name << '=' << col.dictionary->decode(col.codes[i]);
    }
    out << '\n';
  }
}

}  // namespace colgraph

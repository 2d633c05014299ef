#include "colgraph/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "colgraph/error.hpp"

namespace colgraph {

namespace {

std::size_t vertex_count(const GeneratorSpec& s) {
  switch (s.kind) {
    case GeneratorSpec::Kind::star: return s.n + 1;
    case GeneratorSpec::Kind::grid: return s.width * s.height;
    default: return s.n;
  }
}

void validate(const GeneratorSpec& s) {
  using K = GeneratorSpec::Kind;
  if ((s.kind == K::grid && (s.width == 0 || s.height == 0)) || (s.kind != K::grid && s.n == 0)) {
    throw Error("generator parameters must be positive");
  }
  if (s.kind == K::powerlaw && !(s.alpha > 1.0)) throw Error("power-law exponent must be > 1");
  if ((s.kind == K::powerlaw || s.kind == K::uniform) && !(s.avg_outdegree > 0.0)) {
    throw Error("average outdegree must be > 0");
  }
  if (s.type_count == 0 || s.type_count > 26) throw Error("type count must be in [1, 26]");
}

std::vector<std::pair<std::size_t, std::size_t>> topology(const GeneratorSpec& s, std::mt19937_64& rng) {
  using K = GeneratorSpec::Kind;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  switch (s.kind) {
    case K::path:
      for (std::size_t i = 0; i + 1 < s.n; ++i) edges.emplace_back(i, i + 1);
      break;
    case K::star:
      for (std::size_t i = 1; i <= s.n; ++i) edges.emplace_back(0, i);
      break;
    case K::grid:
      for (std::size_t y = 0; y < s.height; ++y) {
        for (std::size_t x = 0; x < s.width; ++x) {
          const std::size_t v = y * s.width + x;
          if (x + 1 < s.width) {
            edges.emplace_back(v, v + 1);
            edges.emplace_back(v + 1, v);
          }
          if (y + 1 < s.height) {
            edges.emplace_back(v, v + s.width);
            edges.emplace_back(v + s.width, v);
          }
        }
      }
      break;
    case K::powerlaw: {
      const double gamma = 1.0 / (s.alpha - 1.0);
      std::vector<double> weight(s.n);
      double total = 0.0;
      for (std::size_t i = 0; i < s.n; ++i) total += weight[i] = std::pow(static_cast<double>(i + 1), -gamma);
      std::discrete_distribution<std::size_t> pick_target(weight.begin(), weight.end());
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      for (std::size_t u = 0; u < s.n; ++u) {
        const double expected = s.avg_outdegree * static_cast<double>(s.n) * weight[u] / total;
        auto degree = static_cast<std::size_t>(expected);
        if (unit(rng) < expected - static_cast<double>(degree)) ++degree;
        degree = std::min(degree, s.n - 1);
        for (std::size_t k = 0; k < degree; ++k) {
          std::size_t v = pick_target(rng);
          while (v == u) v = pick_target(rng);
          edges.emplace_back(u, v);
        }
      }
      break;
    }
    case K::uniform: {
      const auto m = static_cast<std::size_t>(std::llround(static_cast<double>(s.n) * s.avg_outdegree));
      std::uniform_int_distribution<std::size_t> pick(0, s.n - 1);
      for (std::size_t k = 0; k < m; ++k) {
        const std::size_t u = pick(rng);
        edges.emplace_back(u, pick(rng));
      }
      break;
    }
  }
  return edges;
}

}  // namespace

std::string vertex_id(std::size_t index, std::size_t count) {
  std::size_t width = 1;
  for (std::size_t m = count > 0 ? count - 1 : 0; m >= 10; m /= 10) ++width;
  std::string digits = std::to_string(index);
  return "v" + std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

GeneratorSpec parse_generator(const std::string& text) {
  GeneratorSpec s;
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  std::replace(args.begin(), args.end(), ',', ' ');
  std::replace(args.begin(), args.end(), 'x', ' ');
  std::istringstream in(args);
  bool ok = true;
  if (kind == "path" || kind == "star") {
    s.kind = kind == "path" ? GeneratorSpec::Kind::path : GeneratorSpec::Kind::star;
    ok = static_cast<bool>(in >> s.n);
  } else if (kind == "grid") {
    s.kind = GeneratorSpec::Kind::grid;
    ok = static_cast<bool>(in >> s.width >> s.height);
  } else if (kind == "powerlaw") {
    s.kind = GeneratorSpec::Kind::powerlaw;
    ok = static_cast<bool>(in >> s.n >> s.alpha >> s.avg_outdegree);
  } else if (kind == "uniform") {
    s.kind = GeneratorSpec::Kind::uniform;
    ok = static_cast<bool>(in >> s.n >> s.avg_outdegree);
  } else {
    throw Error("unknown generator '" + kind + "'");
  }
  std::string rest;
  if (!ok || (in >> rest)) throw Error("malformed generator spec '" + text + "'");
  validate(s);
  return s;
}

std::string to_string(const GeneratorSpec& s) {
  std::ostringstream out;
  switch (s.kind) {
    case GeneratorSpec::Kind::path: out << "path:" << s.n; break;
    case GeneratorSpec::Kind::star: out << "star:" << s.n; break;
    case GeneratorSpec::Kind::grid: out << "grid:" << s.width << 'x' << s.height; break;
    case GeneratorSpec::Kind::powerlaw: out << "powerlaw:" << s.n << ',' << s.alpha << ',' << s.avg_outdegree; break;
    case GeneratorSpec::Kind::uniform: out << "uniform:" << s.n << ',' << s.avg_outdegree; break;
  }
  out << " seed=" << s.seed << " types=" << s.type_count;
  if (s.zipf_weights) out << " zipf-weights";
  return out.str();
}

Graph generate_graph(const GeneratorSpec& spec) {
  validate(spec);
  std::mt19937_64 rng(spec.seed);
  auto pairs = topology(spec, rng);
  if (spec.shuffle) std::shuffle(pairs.begin(), pairs.end(), rng);

  const std::size_t n = vertex_count(spec);
  std::vector<VertexRecord> vertices(n);
  for (std::size_t i = 0; i < n; ++i) vertices[i].id = vertex_id(i, n);

  std::uniform_int_distribution<std::size_t> pick_type(0, spec.type_count - 1);
  std::vector<double> zipf(100);
  for (std::size_t k = 0; k < zipf.size(); ++k) zipf[k] = 1.0 / std::pow(static_cast<double>(k + 1), 2.0);
  std::discrete_distribution<int> pick_weight(zipf.begin(), zipf.end());

  std::vector<EdgeRecord> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    EdgeRecord e{vertices[u].id, vertices[v].id, {}};
    e.attributes.emplace_back(kTypeAttribute, std::string(1, static_cast<char>('a' + pick_type(rng))));
    if (spec.zipf_weights) e.attributes.emplace_back("weight", std::to_string(pick_weight(rng) + 1));
    edges.push_back(std::move(e));
  }
  return build_graph(vertices, edges);
}

}  // namespace colgraph

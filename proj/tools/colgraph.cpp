// colgraph command-line harness.
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "colgraph/bench.hpp"
#include "colgraph/engine.hpp"
#include "colgraph/error.hpp"
#include "colgraph/generators.hpp"
#include "colgraph/graph_io.hpp"
#include "colgraph/predicate.hpp"
#include "colgraph/tgi.hpp"

using namespace colgraph;

namespace {

struct GraphSource {
  std::string edges;
  std::string vertices;
  std::string generator;
  std::uint64_t seed = 1;
  std::size_t types = 1;
  bool zipf = false;
  bool no_shuffle = false;
  std::string cluster = "none";

  void add_to(CLI::App* cmd, bool with_cluster) {
    cmd->add_option("edges", edges, "edge TSV file");
    cmd->add_option("--vertices", vertices, "vertex TSV file");
    cmd->add_option("-g,--generate", generator, "generator, e.g. grid:100x100, powerlaw:10000,2.2,8, path:5, star:6");
    cmd->add_option("--seed", seed, "generator seed");
    cmd->add_option("--types", types, "number of edge types drawn by the generator");
    cmd->add_flag("--zipf", zipf, "add a zipfian integer 'weight' edge attribute");
    cmd->add_flag("--no-shuffle", no_shuffle, "keep generated edges in generation order");
    if (with_cluster) {
      cmd->add_option("--cluster", cluster, "edge layout: none, type or edge")
          ->check(CLI::IsMember({"none", "type", "edge"}));
    }
  }

  Graph load(std::string* description = nullptr) const {
    if (edges.empty() == generator.empty()) throw Error("give exactly one of an edge file or --generate");
    Graph g;
    if (!generator.empty()) {
      GeneratorSpec spec = parse_generator(generator);
      spec.seed = seed;
      spec.type_count = types;
      spec.zipf_weights = zipf;
      spec.shuffle = !no_shuffle;
      g = generate_graph(spec);
      if (description) *description = to_string(spec);
    } else {
      g = load_graph(edges, vertices);
      if (description) *description = edges;
    }
    return apply_clustering(std::move(g), parse_clustering(cluster));
  }
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Depth parse_depth_arg(const std::string& text) {
  if (text == "inf" || text == "∞") return kInfiniteDepth;
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v >= kInfiniteDepth) throw Error("invalid depth '" + text + "'");
  return static_cast<Depth>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"column-store graph traversal harness"};
  app.require_subcommand(1);

  GraphSource load_src;
  auto* load_cmd = app.add_subcommand("load", "load a TSV graph and print a summary");
  load_src.add_to(load_cmd, false);

  GraphSource gen_src;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("generate", "generate a synthetic graph as TSV");
  gen_cmd->add_option("kind", gen_src.generator, "generator, e.g. grid:10x10")->required();
  gen_cmd->add_option("--seed", gen_src.seed);
  gen_cmd->add_option("--types", gen_src.types);
  gen_cmd->add_flag("--zipf", gen_src.zipf);
  gen_cmd->add_flag("--no-shuffle", gen_src.no_shuffle);
  gen_cmd->add_option("-o,--out", gen_out, "output file (default stdout)");

  GraphSource cl_src;
  std::string cl_out;
  auto* cl_cmd = app.add_subcommand("cluster", "rewrite an edge file clustered by type or by type then source");
  cl_src.add_to(cl_cmd, false);
  cl_cmd->add_option("--by", cl_src.cluster, "type or edge")->required()->check(CLI::IsMember({"type", "edge"}));
  cl_cmd->add_option("-o,--out", cl_out, "output file (default stdout)");

  GraphSource q_src;
  std::vector<std::string> q_starts;
  std::string q_pred = "*", q_collect = "0", q_recurse = "1", q_dir = "fwd", q_op = "auto";
  std::size_t q_xi = 64, q_partitions = 8;
  double q_fpr = 0.01;
  bool q_ids_only = false;
  auto* q_cmd = app.add_subcommand("query", "run one traversal");
  q_src.add_to(q_cmd, true);
  q_cmd->add_option("--start", q_starts, "start vertex id (repeatable)")->required();
  q_cmd->add_option("--predicate", q_pred, "edge predicate, '*' for all edges");
  q_cmd->add_option("--collect", q_collect, "collection boundary c");
  q_cmd->add_option("--recurse", q_recurse, "recursion boundary r or inf");
  q_cmd->add_option("--direction", q_dir)->check(CLI::IsMember({"fwd", "bwd"}));
  q_cmd->add_option("--operator", q_op)->check(CLI::IsMember({"auto", "ls", "fi", "oracle"}));
  q_cmd->add_option("--xi", q_xi, "fragment size");
  q_cmd->add_option("--fpr", q_fpr, "synopsis false positive rate");
  q_cmd->add_option("--partitions", q_partitions, "LS scan partitions");
  q_cmd->add_flag("--ids-only", q_ids_only, "print result ids one per line");

  std::string b_spec, b_csv, b_json;
  auto* b_cmd = app.add_subcommand("bench", "run a benchmark sweep");
  b_cmd->add_option("--spec", b_spec, "benchmark spec JSON")->required();
  b_cmd->add_option("--csv", b_csv, "write the per-cell table here");
  b_cmd->add_option("--json", b_json, "write the JSON report here (default stdout)");

  GraphSource t_src;
  std::vector<std::size_t> t_xi{64};
  std::vector<double> t_fpr{0.01};
  std::string t_dir = "fwd", t_policy = "fixed";
  auto* t_cmd = app.add_subcommand("tgi-report", "build transition graph indexes and report their size");
  t_src.cluster = "edge";
  t_src.add_to(t_cmd, true);
  t_cmd->add_option("--xi", t_xi, "fragment sizes");
  t_cmd->add_option("--fpr", t_fpr, "false positive rates");
  t_cmd->add_option("--direction", t_dir)->check(CLI::IsMember({"fwd", "bwd"}));
  t_cmd->add_option("--policy", t_policy)->check(CLI::IsMember({"fixed", "degree-adaptive"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*load_cmd) {
      const Graph g = load_src.load();
      std::cout << "|V|=" << g.vertex_count() << " |E|=" << g.edge_count() << '\n';
    } else if (*gen_cmd) {
      const Graph g = gen_src.load();
      std::ostringstream out;
      write_graph_tsv(out, g.edges);
      write_output(gen_out, out.str());
    } else if (*cl_cmd) {
      const Graph g = cl_src.load();
      std::ostringstream out;
      write_graph_tsv(out, g.edges);
      write_output(cl_out, out.str());
    } else if (*q_cmd) {
      auto g = std::make_shared<const Graph>(q_src.load());
      TraversalEngine::Options opts;
      opts.partitions = q_partitions;
      TraversalEngine engine(g, CostParams{1.0, q_fpr, q_xi}, opts);
      TraversalConfig cfg;
      cfg.start_vertices = q_starts;
      cfg.predicate = parse_predicate(q_pred);
      cfg.collect = parse_depth_arg(q_collect);
      cfg.recurse = parse_depth_arg(q_recurse);
      cfg.direction = q_dir == "fwd" ? Direction::forward : Direction::backward;
      std::optional<OperatorKind> force;
      if (q_op != "auto") force = parse_operator(q_op);
      const TraversalResult res = engine.traverse(cfg, force);
      if (q_ids_only) {
        for (const auto& v : res.vertices) std::cout << v << '\n';
      } else {
        std::cout << "{\"vertices\":[";
        for (std::size_t i = 0; i < res.vertices.size(); ++i) {
          std::cout << (i ? "," : "") << '"' << res.vertices[i] << '"';
        }
        std::cout << "],\"report\":" << to_json(res.report) << "}\n";
      }
    } else if (*b_cmd) {
      const BenchmarkReport report = run_benchmark(parse_benchmark_spec(read_file(b_spec)));
      if (!b_csv.empty()) write_output(b_csv, to_csv(report));
      write_output(b_json, to_json(report) + "\n");
    } else if (*t_cmd) {
      const Graph g = t_src.load();
      const Direction d = t_dir == "fwd" ? Direction::forward : Direction::backward;
      std::cout << '[';
      bool first = true;
      for (auto xi : t_xi) {
        for (auto p : t_fpr) {
          TgiOptions o;
          o.policy = t_policy == "fixed" ? FragmentSizePolicy::fixed : FragmentSizePolicy::degree_adaptive;
          o.fragment_size = xi;
          o.false_positive_rate = p;
          const auto tgi = build_tgi(g.edges, o, d);
          std::cout << (first ? "" : ",") << '\n' << to_json(make_tgi_report(tgi, g.edges));
          first = false;
        }
      }
      std::cout << "\n]\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

#include "doctest.h"

#include <random>

#include "colgraph/error.hpp"
#include "colgraph/generators.hpp"
#include "colgraph/predicate.hpp"
#include "fixtures.hpp"
#include "reference.hpp"

using namespace colgraph;
using namespace colgraph::testing;

TEST_CASE("parse single atom") {
  CHECK(parse_predicate("type=a") == Predicate::atom("type", CompareOp::eq, "a"));
  CHECK(parse_predicate("  type == 'a' ") == Predicate::atom("type", CompareOp::eq, "a"));
  CHECK(parse_predicate("*") == Predicate::truth());
}

TEST_CASE("parse connectives in every spelling") {
  const auto expected =
      Predicate::any_of({Predicate::atom("type", CompareOp::eq, "a"), Predicate::atom("type", CompareOp::eq, "b")});
  CHECK(parse_predicate("type=a ∨ type=b") == expected);
  CHECK(parse_predicate("type=a or type=b") == expected);
  CHECK(parse_predicate("type=a OR type=b") == expected);
  CHECK(parse_predicate("type=a || type=b") == expected);
  CHECK(parse_predicate("¬type=a") == parse_predicate("not type=a"));
  CHECK(parse_predicate("!type=a") == parse_predicate("NOT type = a"));
  CHECK(parse_predicate("w ≥ 3 ∧ w ≤ 9") == parse_predicate("w >= 3 and w <= 9"));
  CHECK(parse_predicate("w ≠ 3") == parse_predicate("w != 3"));
  CHECK(parse_predicate("w <> 3") == parse_predicate("w != 3"));
}

TEST_CASE("AND binds tighter than OR") {
  const auto p = parse_predicate("a=1 or b=2 and c=3");
  REQUIRE(p.kind == Predicate::Kind::disjunction);
  CHECK(p.children[1].kind == Predicate::Kind::conjunction);
  const auto q = parse_predicate("(a=1 or b=2) and c=3");
  CHECK(q.kind == Predicate::Kind::conjunction);
}

TEST_CASE("to_string round trips") {
  for (const char* text : {"type=a", "type=a or type=b", "not (x < 3 and y >= 'q r')", "*", "w != 7"}) {
    const auto p = parse_predicate(text);
    CHECK(parse_predicate(to_string(p)) == p);
  }
}

TEST_CASE("syntax errors carry offsets") {
  try {
    parse_predicate("rating >");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 8);
  }
  CHECK_THROWS_AS(parse_predicate("type = a or"), ParseError);
  CHECK_THROWS_AS(parse_predicate("(type = a"), ParseError);
  CHECK_THROWS_AS(parse_predicate("type ~ a"), ParseError);
  CHECK_THROWS_AS(parse_predicate("type = a b"), ParseError);
  CHECK_THROWS_AS(parse_predicate(""), ParseError);
}

TEST_CASE("value comparison") {
  CHECK(compare_values("10", CompareOp::gt, "9"));
  CHECK_FALSE(compare_values("10", CompareOp::gt, "9x"));
  CHECK(compare_values("2.5", CompareOp::eq, "2.50"));
  CHECK(compare_values("b", CompareOp::ge, "a"));
}

TEST_CASE("evaluate on the fixture") {
  const Graph g = fixture_graph();
  const auto clustered = cluster_by_type(g.edges);
  for (const auto* edges : {&g.edges, &clustered}) {
    CHECK(evaluate(parse_predicate("type=a"), *edges).count() == 4);
    CHECK(evaluate(parse_predicate("*"), *edges).count() == 6);
    CHECK(evaluate(parse_predicate("type=a ∧ type=b"), *edges).count() == 0);
    CHECK(evaluate(parse_predicate("type=a ∨ type=b"), *edges).count() == 6);
    CHECK(evaluate(parse_predicate("type!=a"), *edges).count() == 2);
  }
  CHECK(selected_type_ranges(parse_predicate("type=b"), clustered).has_value());
  CHECK_FALSE(selected_type_ranges(parse_predicate("type=b"), g.edges).has_value());
}

TEST_CASE("unknown attributes are reported") {
  const Graph g = fixture_graph();
  try {
    check_attributes(parse_predicate("type = a and colour = red"), g.edges);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("colour") != std::string::npos);
  }
}

TEST_CASE("null attribute values never satisfy an atom") {
  std::vector<EdgeRecord> e{{"x", "y", {{"type", "t"}, {"w", "3"}}}, {"y", "x", {{"type", "t"}}}};
  const auto g = build_graph_from_edges(e);
  CHECK(evaluate(parse_predicate("w = 3"), g.edges).count() == 1);
  CHECK(evaluate(parse_predicate("w != 3"), g.edges).count() == 0);
  CHECK(evaluate(parse_predicate("not w = 3"), g.edges).count() == 1);
}

TEST_CASE("visibility masks the result") {
  const Graph g = fixture_graph();
  ActiveEdgeList vis(6, true);
  vis.reset(0);
  const auto bits = evaluate(parse_predicate("*"), g.edges, &vis);
  CHECK(bits.count() == 5);
  CHECK_FALSE(bits.test(0));
}

namespace {

std::string random_predicate(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 1);
  static const char* ops[] = {"=", "!=", "<", "<=", ">", ">="};
  switch (pick(rng)) {
    case 0: return std::string("type ") + ops[rng() % 6] + " " + static_cast<char>('a' + rng() % 4);
    case 1: return std::string("weight ") + ops[rng() % 6] + " " + std::to_string(1 + rng() % 20);
    case 2: return "(" + random_predicate(rng, depth - 1) + " and " + random_predicate(rng, depth - 1) + ")";
    case 3: return "(" + random_predicate(rng, depth - 1) + " or " + random_predicate(rng, depth - 1) + ")";
    case 4: return "not " + random_predicate(rng, depth - 1);
    default: return "*";
  }
}

}  // namespace

TEST_CASE("pushdown equals row-wise evaluation on randomized graphs") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 40; ++round) {
    GeneratorSpec s = parse_generator("uniform:60,4");
    s.seed = round + 1;
    s.type_count = 1 + round % 4;
    s.zipf_weights = true;
    const Graph g = generate_graph(s);
    const auto clustered = cluster_by_edge(cluster_by_type(g.edges));
    for (int q = 0; q < 10; ++q) {
      const auto p = parse_predicate(random_predicate(rng, 3));
      CHECK(evaluate(p, g.edges) == evaluate_rowwise(p, g.edges));
      CHECK(evaluate(p, clustered) == evaluate_rowwise(p, clustered));
      CHECK(evaluate(p, clustered) == evaluate(p, clustered));
    }
    for (int q = 0; q < 10; ++q) {
      const auto a = parse_predicate(random_predicate(rng, 2));
      const auto b = parse_predicate(random_predicate(rng, 2));
      const auto lhs = Predicate::negate(Predicate::any_of({a, b}));
      const auto rhs = Predicate::all_of({Predicate::negate(a), Predicate::negate(b)});
      CHECK(evaluate(lhs, clustered) == evaluate(rhs, clustered));
      CHECK(evaluate(lhs, g.edges) == evaluate(rhs, g.edges));
    }
  }
}

#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "colgraph/bitset.hpp"
#include "colgraph/storage.hpp"

namespace colgraph {

enum class CompareOp { eq, ne, lt, le, gt, ge };

/// Edge predicate: a propositional formula over `attribute op literal` atoms.
struct Predicate {
  enum class Kind { always_true, atom, conjunction, disjunction, negation };

  Kind kind = Kind::always_true;
  // Atom fields.
  std::string attribute;
  CompareOp op = CompareOp::eq;
  std::string literal;
  // Operands of conjunction/disjunction (two or more) and negation (one).
  std::vector<Predicate> children;

  static Predicate truth() { return {}; }
  static Predicate atom(std::string attribute, CompareOp op, std::string literal);
  static Predicate all_of(std::vector<Predicate> operands);
  static Predicate any_of(std::vector<Predicate> operands);
  static Predicate negate(Predicate operand);

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

/// Parses the predicate syntax:
///
///   expr   := term (OR term)*
///   term   := factor (AND factor)*
///   factor := NOT factor | '(' expr ')' | atom | '*'
///   atom   := name op literal
///
/// OR is `or`, `||` or `∨`; AND is `and`, `&&` or `∧`; NOT is `not`, `!` or
/// `¬`. Operators: = == != <> ≠ < <= ≤ > >= ≥. Literals are bare words,
/// decimal numbers, or single/double quoted strings.
Predicate parse_predicate(std::string_view text);

std::string to_string(const Predicate& p);

std::set<std::string> referenced_attributes(const Predicate& p);

/// Compares a stored value against a literal: numerically when both parse as
/// decimal numbers, lexicographically otherwise.
bool compare_values(std::string_view stored, CompareOp op, std::string_view literal);

/// Throws Error naming the first attribute of `p` missing from `g`.
void check_attributes(const Predicate& p, const EdgeColumnGroup& g);

/// When `p` references only the type attribute and `g` is type-clustered,
/// returns the position ranges of the selected types (ascending). Otherwise
/// std::nullopt.
std::optional<std::vector<PositionRange>> selected_type_ranges(const Predicate& p,
                                                               const EdgeColumnGroup& g);

/// Predicate pushdown. Bit i is set iff edge i satisfies `p` and is visible.
/// Uses whole type ranges when `selected_type_ranges` applies, and per-atom
/// dictionary truth tables with bitwise combination otherwise.
ActiveEdgeList evaluate(const Predicate& p, const EdgeColumnGroup& g,
                        const ActiveEdgeList* visibility = nullptr);

/// Row-at-a-time evaluation without any shortcut; reference for tests.
ActiveEdgeList evaluate_rowwise(const Predicate& p, const EdgeColumnGroup& g,
                                const ActiveEdgeList* visibility = nullptr);

}  // namespace colgraph

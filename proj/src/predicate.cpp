#include "colgraph/predicate.hpp"

#include <cctype>
#include <charconv>
#include <functional>

#include "colgraph/error.hpp"

namespace colgraph {

Predicate Predicate::atom(std::string attribute, CompareOp op, std::string literal) {
  Predicate p;
  p.kind = Kind::atom;
  p.attribute = std::move(attribute);
  p.op = op;
  p.literal = std::move(literal);
  return p;
}

Predicate Predicate::all_of(std::vector<Predicate> operands) {
  if (operands.size() == 1) return std::move(operands.front());
  Predicate p;
  p.kind = Kind::conjunction;
  p.children = std::move(operands);
  return p;
}

Predicate Predicate::any_of(std::vector<Predicate> operands) {
  if (operands.size() == 1) return std::move(operands.front());
  Predicate p;
  p.kind = Kind::disjunction;
  p.children = std::move(operands);
  return p;
}

Predicate Predicate::negate(Predicate operand) {
  Predicate p;
  p.kind = Kind::negation;
  p.children.push_back(std::move(operand));
  return p;
}

namespace {

enum class Tok { end, word, number, string, op, kw_and, kw_or, kw_not, lparen, rparen, star };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
  CompareOp op = CompareOp::eq;
};

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' || c == ':';
}

bool is_number(std::string_view s, double* out = nullptr) {
  if (s.empty()) return false;
  double v = 0;
  auto first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return false;
  if (out) *out = v;
  return true;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::end, "", pos_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Token next() {
    const std::size_t start = pos_;
    auto simple = [&](Tok k, std::size_t len) {
      pos_ += len;
      return Token{k, std::string(text_.substr(start, len)), start};
    };
    auto compare = [&](CompareOp op, std::size_t len) {
      Token t = simple(Tok::op, len);
      t.op = op;
      return t;
    };
    const char c = text_[pos_];
    if (c == '(') return simple(Tok::lparen, 1);
    if (c == ')') return simple(Tok::rparen, 1);
    if (c == '*') return simple(Tok::star, 1);
    if (starts_with("∧") || starts_with("&&")) return simple(Tok::kw_and, starts_with("&&") ? 2 : 3);
    if (starts_with("∨") || starts_with("||")) return simple(Tok::kw_or, starts_with("||") ? 2 : 3);
    if (starts_with("¬")) return simple(Tok::kw_not, 2);
    if (starts_with("≠")) return compare(CompareOp::ne, 3);
    if (starts_with("≤")) return compare(CompareOp::le, 3);
    if (starts_with("≥")) return compare(CompareOp::ge, 3);
    if (c == '"' || c == '\'') return quoted(c);
    if (std::string_view("=!<>~").find(c) != std::string_view::npos) {
      std::size_t end = pos_;
      while (end < text_.size() && std::string_view("=!<>~").find(text_[end]) != std::string_view::npos) ++end;
      const std::string_view sym = text_.substr(pos_, end - pos_);
      if (sym == "=" || sym == "==") return compare(CompareOp::eq, sym.size());
      if (sym == "!=" || sym == "<>") return compare(CompareOp::ne, sym.size());
      if (sym == "<") return compare(CompareOp::lt, 1);
      if (sym == "<=") return compare(CompareOp::le, 2);
      if (sym == ">") return compare(CompareOp::gt, 1);
      if (sym == ">=") return compare(CompareOp::ge, 2);
      if (sym == "!") return simple(Tok::kw_not, 1);
      throw ParseError("unknown operator '" + std::string(sym) + "'", start);
    }
    if (is_word_char(c) || c == '+') {
      std::size_t end = pos_ + 1;
      while (end < text_.size() && is_word_char(text_[end])) ++end;
      const std::string_view w = text_.substr(pos_, end - pos_);
      const std::string lw = lower(w);
      Tok kind = Tok::word;
      if (lw == "and") kind = Tok::kw_and;
      else if (lw == "or") kind = Tok::kw_or;
      else if (lw == "not") kind = Tok::kw_not;
      else if (is_number(w)) kind = Tok::number;
      return simple(kind, end - pos_);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
  }

  Token quoted(char quote) {
    const std::size_t start = pos_++;
    std::string value;
    while (pos_ < text_.size() && text_[pos_] != quote) {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
      value += text_[pos_++];
    }
    if (pos_ >= text_.size()) throw ParseError("unterminated string literal", start);
    ++pos_;
    return {Tok::string, std::move(value), start};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Predicate parse() {
    Predicate p = expr();
    if (peek().kind != Tok::end) fail("unexpected token '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, peek().offset); }

  Predicate expr() {
    std::vector<Predicate> terms{term()};
    while (peek().kind == Tok::kw_or) {
      take();
      terms.push_back(term());
    }
    return Predicate::any_of(std::move(terms));
  }

  Predicate term() {
    std::vector<Predicate> factors{factor()};
    while (peek().kind == Tok::kw_and) {
      take();
      factors.push_back(factor());
    }
    return Predicate::all_of(std::move(factors));
  }

  Predicate factor() {
    switch (peek().kind) {
      case Tok::kw_not:
        take();
        return Predicate::negate(factor());
      case Tok::lparen: {
        take();
        Predicate inner = expr();
        if (peek().kind != Tok::rparen) fail("expected ')'");
        take();
        return inner;
      }
      case Tok::star:
        take();
        return Predicate::truth();
      case Tok::word:
        return atom();
      case Tok::end:
        fail("unexpected end of predicate");
      default:
        fail("unexpected token '" + peek().text + "'");
    }
  }

  Predicate atom() {
    std::string name = take().text;
    if (peek().kind != Tok::op) fail("expected comparison operator");
    const CompareOp op = take().op;
    switch (peek().kind) {
      case Tok::word:
      case Tok::number:
      case Tok::string:
      case Tok::kw_and:
      case Tok::kw_or:
      case Tok::kw_not:
        return Predicate::atom(std::move(name), op, take().text);
      default:
        fail("expected literal");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

const char* op_symbol(CompareOp op) {
  switch (op) {
    case CompareOp::eq: return "=";
    case CompareOp::ne: return "!=";
    case CompareOp::lt: return "<";
    case CompareOp::le: return "<=";
    case CompareOp::gt: return ">";
    case CompareOp::ge: return ">=";
  }
  return "?";
}

void collect_attributes(const Predicate& p, std::set<std::string>& out) {
  if (p.kind == Predicate::Kind::atom) out.insert(p.attribute);
  for (const auto& c : p.children) collect_attributes(c, out);
}

template <typename T>
bool apply(CompareOp op, const T& a, const T& b) {
  switch (op) {
    case CompareOp::eq: return a == b;
    case CompareOp::ne: return a != b;
    case CompareOp::lt: return a < b;
    case CompareOp::le: return a <= b;
    case CompareOp::gt: return a > b;
    case CompareOp::ge: return a >= b;
  }
  return false;
}

// Truth value of an atom for every dictionary code of its column.
std::vector<char> truth_table(const Predicate& atom, const Column& col) {
  const auto& values = col.dictionary->values();
  std::vector<char> table(values.size());
  for (std::size_t c = 0; c < values.size(); ++c) table[c] = compare_values(values[c], atom.op, atom.literal);
  return table;
}

Bitset evaluate_bits(const Predicate& p, const EdgeColumnGroup& g) {
  using K = Predicate::Kind;
  const std::size_t n = g.size();
  switch (p.kind) {
    case K::always_true:
      return Bitset(n, true);
    case K::atom: {
      const Column& col = *g.attribute(p.attribute);
      const auto table = truth_table(p, col);
      Bitset bits(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (!col.is_null(i) && table[col.codes[i]]) bits.set(i);
      }
      return bits;
    }
    case K::conjunction: {
      Bitset bits = evaluate_bits(p.children.front(), g);
      for (std::size_t k = 1; k < p.children.size(); ++k) bits &= evaluate_bits(p.children[k], g);
      return bits;
    }
    case K::disjunction: {
      Bitset bits = evaluate_bits(p.children.front(), g);
      for (std::size_t k = 1; k < p.children.size(); ++k) bits |= evaluate_bits(p.children[k], g);
      return bits;
    }
    case K::negation:
      return evaluate_bits(p.children.front(), g).flip();
  }
  return Bitset(n);
}

// `lookup` returns the stored value of an attribute, or nullptr for null.
bool evaluate_record(const Predicate& p, const std::function<const std::string*(const std::string&)>& lookup) {
  using K = Predicate::Kind;
  switch (p.kind) {
    case K::always_true:
      return true;
    case K::atom: {
      const std::string* v = lookup(p.attribute);
      return v != nullptr && compare_values(*v, p.op, p.literal);
    }
    case K::conjunction:
      for (const auto& c : p.children) {
        if (!evaluate_record(c, lookup)) return false;
      }
      return true;
    case K::disjunction:
      for (const auto& c : p.children) {
        if (evaluate_record(c, lookup)) return true;
      }
      return false;
    case K::negation:
      return !evaluate_record(p.children.front(), lookup);
  }
  return false;
}

}  // namespace

Predicate parse_predicate(std::string_view text) { return Parser(Lexer(text).run()).parse(); }

std::string to_string(const Predicate& p) {
  using K = Predicate::Kind;
  auto join = [&](const char* sep) {
    std::string out = "(";
    for (std::size_t k = 0; k < p.children.size(); ++k) {
      if (k) out += sep;
      out += to_string(p.children[k]);
    }
    return out + ")";
  };
  switch (p.kind) {
    case K::always_true: return "*";
    case K::atom: return p.attribute + op_symbol(p.op) + "'" + p.literal + "'";
    case K::conjunction: return join(" and ");
    case K::disjunction: return join(" or ");
    case K::negation: return "not " + to_string(p.children.front());
  }
  return "?";
}

std::set<std::string> referenced_attributes(const Predicate& p) {
  std::set<std::string> out;
  collect_attributes(p, out);
  return out;
}

bool compare_values(std::string_view stored, CompareOp op, std::string_view literal) {
  double a = 0, b = 0;
  if (is_number(stored, &a) && is_number(literal, &b)) return apply(op, a, b);
  return apply(op, stored, literal);
}

void check_attributes(const Predicate& p, const EdgeColumnGroup& g) {
  for (const auto& name : referenced_attributes(p)) {
    if (g.attribute(name) == nullptr) throw Error("unknown edge attribute '" + name + "'");
  }
}

std::optional<std::vector<PositionRange>> selected_type_ranges(const Predicate& p,
                                                               const EdgeColumnGroup& g) {
  if (g.layout == EdgeLayout::unclustered) return std::nullopt;
  const auto attrs = referenced_attributes(p);
  if (attrs.size() != 1 || *attrs.begin() != kTypeAttribute) return std::nullopt;
  const Column& type = *g.attribute(kTypeAttribute);
  std::vector<PositionRange> ranges;
  for (const auto& [code, range] : g.type_ranges) {
    const std::string& value = type.dictionary->decode(code);
    if (evaluate_record(p, [&](const std::string&) { return &value; })) ranges.push_back(range);
  }
  return ranges;
}

ActiveEdgeList evaluate(const Predicate& p, const EdgeColumnGroup& g, const ActiveEdgeList* visibility) {
  check_attributes(p, g);
  ActiveEdgeList bits;
  if (auto ranges = selected_type_ranges(p, g)) {
    bits = Bitset(g.size());
    for (const auto& r : *ranges) bits.set_range(r.begin, r.end);
  } else {
    bits = evaluate_bits(p, g);
  }
  if (visibility) bits &= *visibility;
  return bits;
}

ActiveEdgeList evaluate_rowwise(const Predicate& p, const EdgeColumnGroup& g,
                                const ActiveEdgeList* visibility) {
  check_attributes(p, g);
  ActiveEdgeList bits(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto lookup = [&](const std::string& name) -> const std::string* {
      const Column& col = *g.attribute(name);
      if (col.is_null(i)) return nullptr;
      return &col.dictionary->decode(col.codes[i]);
    };
    if (evaluate_record(p, lookup) && (!visibility || visibility->test(i))) bits.set(i);
  }
  return bits;
}

}  // namespace colgraph

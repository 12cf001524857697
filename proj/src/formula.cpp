#include "roc/formula.hpp"

#include <cctype>
#include <sstream>

namespace roc {

namespace {

class Parser {
public:
  Parser(std::string_view text, VarRegistry& registry)
      : text_(text), registry_(registry) {}

  FormulaPtr run() {
    skip_ws();
    if (at_end()) fail("empty formula");
    FormulaPtr f = parse_or();
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
    return f;
  }

private:
  FormulaPtr parse_or() {
    std::vector<FormulaPtr> parts{parse_and()};
    while (true) {
      skip_ws();
      if (!at_end() && peek() == '|') {
        advance();
        parts.push_back(parse_and());
      } else {
        break;
      }
    }
    return Formula::disj(std::move(parts));
  }

  FormulaPtr parse_and() {
    std::vector<FormulaPtr> parts{parse_atom()};
    while (true) {
      skip_ws();
      if (!at_end() && peek() == '&') {
        advance();
        parts.push_back(parse_atom());
      } else {
        break;
      }
    }
    return Formula::conj(std::move(parts));
  }

  FormulaPtr parse_atom() {
    skip_ws();
    if (at_end()) fail("expected variable or '('");
    char c = peek();
    if (c == '!' || c == '~') fail("negation not allowed");
    if (c == '(') {
      advance();
      FormulaPtr f = parse_or();
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      advance();
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                           peek() == '_'))
        advance();
      return Formula::var(registry_.intern(text_.substr(start, pos_ - start)));
    }
    fail("unexpected character");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      advance();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

  std::string_view text_;
  VarRegistry& registry_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

void render_rec(const Formula& f, const VarRegistry& registry,
                std::ostream& out) {
  if (f.kind() == NodeKind::Var) {
    out << registry.name(f.var_id());
    return;
  }
  const char* op = f.kind() == NodeKind::And ? " & " : " | ";
  out << '(';
  bool first = true;
  for (const auto& child : f.children()) {
    if (!first) out << op;
    first = false;
    render_rec(*child, registry, out);
  }
  out << ')';
}

void count_occurrences(const Formula& f, std::map<int, int>& counts) {
  if (f.kind() == NodeKind::Var) {
    ++counts[f.var_id()];
    return;
  }
  for (const auto& child : f.children()) count_occurrences(*child, counts);
}

}  // namespace

FormulaPtr parse_formula(std::string_view text, VarRegistry& registry) {
  return Parser(text, registry).run();
}

std::string render(const Formula& f, const VarRegistry& registry) {
  std::ostringstream out;
  render_rec(f, registry, out);
  return out.str();
}

bool eval(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case NodeKind::Var:
      return a.test(f.var_id());
    case NodeKind::And:
      for (const auto& child : f.children())
        if (!eval(*child, a)) return false;
      return true;
    case NodeKind::Or:
      for (const auto& child : f.children())
        if (eval(*child, a)) return true;
      return false;
  }
  return false;
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return false;
  if (a.kind() == NodeKind::Var) return a.var_id() == b.var_id();
  if (a.children().size() != b.children().size()) return false;
  for (std::size_t i = 0; i < a.children().size(); ++i)
    if (!structurally_equal(*a.children()[i], *b.children()[i])) return false;
  return true;
}

int max_occurrences(const Formula& f) {
  std::map<int, int> counts;
  count_occurrences(f, counts);
  int best = 0;
  for (const auto& [v, c] : counts) best = std::max(best, c);
  return best;
}

VarSet support(const Formula& f) {
  if (f.kind() == NodeKind::Var) {
    VarSet s;
    s.insert(f.var_id());
    return s;
  }
  VarSet s;
  for (const auto& child : f.children()) s = s.set_union(support(*child));
  return s;
}

RestrictResult restrict_formula(const Formula& f,
                                const std::map<int, bool>& fixed) {
  if (f.kind() == NodeKind::Var) {
    auto it = fixed.find(f.var_id());
    if (it != fixed.end()) return {it->second, nullptr};
    return {std::nullopt, Formula::var(f.var_id())};
  }
  const bool is_and = f.kind() == NodeKind::And;
  std::vector<FormulaPtr> kept;
  for (const auto& child : f.children()) {
    RestrictResult r = restrict_formula(*child, fixed);
    if (r.is_constant()) {
      // Absorbing constant short-circuits the gate; identity is dropped.
      if (*r.constant != is_and) return {*r.constant, nullptr};
    } else {
      kept.push_back(r.formula);
    }
  }
  if (kept.empty()) return {is_and, nullptr};
  return {std::nullopt,
          is_and ? Formula::conj(std::move(kept)) : Formula::disj(std::move(kept))};
}

}  // namespace roc

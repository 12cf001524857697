#ifndef ROC_FORMULA_HPP
#define ROC_FORMULA_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "roc/varset.hpp"

namespace roc {

/// Interns variable names to dense ids so that VarSets built from different
/// formulas of one analysis session are comparable.
class VarRegistry {
public:
  int intern(std::string_view name) {
    auto it = index_.find(std::string(name));
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(names_.size());
    names_.emplace_back(name);
    index_.emplace(names_.back(), id);
    return id;
  }

  std::optional<int> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& name(int id) const { return names_.at(id); }
  std::size_t size() const { return names_.size(); }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

enum class NodeKind { Var, And, Or };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable monotone formula AST: variables, AND and OR gates only.
/// Gates always have at least two children.
class Formula {
public:
  static FormulaPtr var(int id) {
    return FormulaPtr(new Formula(NodeKind::Var, id, {}));
  }

  /// Builds an AND gate. A single child collapses to the child itself.
  static FormulaPtr conj(std::vector<FormulaPtr> children) {
    return gate(NodeKind::And, std::move(children));
  }
  /// Builds an OR gate. A single child collapses to the child itself.
  static FormulaPtr disj(std::vector<FormulaPtr> children) {
    return gate(NodeKind::Or, std::move(children));
  }

  NodeKind kind() const { return kind_; }
  int var_id() const { return var_; }
  const std::vector<FormulaPtr>& children() const { return children_; }

private:
  static FormulaPtr gate(NodeKind k, std::vector<FormulaPtr> children) {
    if (children.empty())
      throw std::invalid_argument("gate requires at least one child");
    if (children.size() == 1) return children.front();
    return FormulaPtr(new Formula(k, -1, std::move(children)));
  }

  Formula(NodeKind k, int v, std::vector<FormulaPtr> children)
      : kind_(k), var_(v), children_(std::move(children)) {}

  NodeKind kind_;
  int var_;
  std::vector<FormulaPtr> children_;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Parses the formula grammar: `&` binds tighter than `|`, both
/// left-associative, parentheses, NAME = [A-Za-z_][A-Za-z0-9_]*.
/// Variables are interned into `registry` on first sight.
FormulaPtr parse_formula(std::string_view text, VarRegistry& registry);

/// Fully parenthesized rendering; re-parses to a structurally equal AST.
std::string render(const Formula& f, const VarRegistry& registry);

bool eval(const Formula& f, const Assignment& a);

bool structurally_equal(const Formula& a, const Formula& b);

/// Maximum number of occurrences of any single variable in the AST
/// (syntactic readability of the formula).
int max_occurrences(const Formula& f);

VarSet support(const Formula& f);

/// Result of a restriction: either a constant or a formula over the
/// remaining variables.
struct RestrictResult {
  std::optional<bool> constant;
  FormulaPtr formula;  // set iff !constant
  bool is_constant() const { return constant.has_value(); }
};

/// Substitutes the fixed variables and simplifies constant subtrees away.
RestrictResult restrict_formula(const Formula& f,
                                const std::map<int, bool>& fixed);

}  // namespace roc

#endif

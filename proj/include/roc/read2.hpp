#ifndef ROC_READ2_HPP
#define ROC_READ2_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "roc/families.hpp"
#include "roc/varset.hpp"

namespace roc {

struct Literal {
  int var;
  bool positive;
  bool operator==(const Literal&) const = default;
};

struct NotRead2Error : std::runtime_error {
  NotRead2Error() : std::runtime_error("not read-2") {}
};

/// A CNF with signed literals. Tautological clauses (a variable in both
/// signs) are dropped at construction; resolution can create them.
class LiteralCnf {
public:
  void add_clause(std::vector<Literal> lits);

  const std::vector<std::vector<Literal>>& clauses() const { return clauses_; }

  /// True iff every variable occurs in at most two literal positions.
  bool is_read2() const;

  /// Largest mentioned variable id + 1 (0 when no clauses).
  std::size_t width() const { return width_; }

private:
  std::vector<std::vector<Literal>> clauses_;
  std::size_t width_ = 0;
};

struct SatResult {
  bool satisfiable;
  std::optional<Assignment> model;  // covers all mentioned variables
};

/// Polynomial-time satisfiability for read-2 CNFs: unit propagation,
/// pure-literal elimination, and resolution on variables with exactly one
/// positive and one negative occurrence, with model reconstruction by
/// replaying eliminations in reverse. Throws NotRead2Error otherwise.
SatResult solve_read2(const LiteralCnf& cnf);

/// Tautology test for C -> D via read-2 satisfiability of
/// C and-not D. When not a tautology, the second component is the
/// counterexample one-set S0, inclusion-minimized (ascending variable id)
/// subject to C(S0->1)=1 and D(S0->1)=0.
std::pair<bool, std::optional<VarSet>> implies_tautology(const ReadOnceCnf& c,
                                                         const ReadOnceDnf& d);

/// Zero-side counterexample for C -> D, used by the maxterm constructions:
/// returns nullopt when C -> D is a tautology, otherwise a minimal set W
/// of D-support variables such that C(W->0)=1 and D(W->0)=0 (every term of
/// D meets W in exactly one variable, no clause of C is inside W).
/// An empty D counts as the constant 0, an empty C as the constant 1.
/// Callers must ensure the clauses of C live inside the support of D.
std::optional<VarSet> tautology_zero_witness(const ReadOnceCnf& c,
                                             const ReadOnceDnf& d);

}  // namespace roc

#endif

#ifndef ROC_RECOGNIZER_HPP
#define ROC_RECOGNIZER_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "roc/families.hpp"
#include "roc/formula.hpp"
#include "roc/varset.hpp"

namespace roc {

/// A validated C-or-D input: C a read-once CNF, D a read-once DNF whose
/// terms cover every variable, and every variable of C occurring in D.
struct Instance {
  ReadOnceCnf C;
  ReadOnceDnf D;
  std::size_t n_vars;
};

/// Checks all instance invariants; throws ValidationError otherwise.
Instance validate(std::vector<VarSet> clauses, std::vector<VarSet> terms,
                  const VarRegistry& registry);

/// A left set: contained in the union of C's clauses and meeting every
/// clause in exactly one variable.
bool is_left_set(const Instance& inst, const VarSet& s);

/// Indices j such that D_j is a minterm of C-or-D, i.e. D_j does not
/// properly include any left set.
std::vector<std::size_t> right_minterms(const Instance& inst);

/// Maxterm containing both clauses C_u and C_v, when one exists
/// (criterion: |(C_u u C_v) n D_j| <= 1 for every term).
std::optional<VarSet> maxterm_with_two_clauses(const Instance& inst,
                                               std::size_t u, std::size_t v);

/// Maxterm containing clause C_i, when one exists. Requires the step-2
/// hypothesis: no maxterm of C-or-D contains two distinct clauses.
std::optional<VarSet> maxterm_with_clause(const Instance& inst, std::size_t i);

/// Left minterm containing both variables a and b, when one exists.
std::optional<VarSet> left_minterm_with_pair(const Instance& inst, int a, int b);

/// Maxterm containing C_u and the variable p of the term disjoint from C_u,
/// when one exists. Requires the step-2 hypothesis and p outside C_u.
std::optional<VarSet> maxterm_with_clause_plus(const Instance& inst,
                                               std::size_t u, int p);

enum class Verdict { ReadOnce, NotReadOnce };

enum class Step { Tautology = 1, TwoClauses = 2, RightMinterm = 3,
                  LeftMinterm = 4, Final = 5 };

struct RecognitionResult {
  Verdict verdict;
  std::optional<std::pair<VarSet, VarSet>> witness;  // (minterm, maxterm)
  Step step;
};

/// The four-step polynomial-time pipeline deciding whether C-or-D computes
/// a read-once function, with a certified (minterm, maxterm) witness on
/// rejection. Iteration is ascending everywhere, so results and witnesses
/// are deterministic.
RecognitionResult recognize(const Instance& inst);

}  // namespace roc

#endif

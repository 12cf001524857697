#ifndef ROC_FAMILIES_HPP
#define ROC_FAMILIES_HPP

#include <stdexcept>
#include <vector>

#include "roc/formula.hpp"
#include "roc/varset.hpp"

namespace roc {

/// A read-once monotone CNF: clauses are pairwise-disjoint variable sets.
struct ReadOnceCnf {
  std::vector<VarSet> clauses;
};

/// A read-once monotone DNF: terms are pairwise-disjoint variable sets.
struct ReadOnceDnf {
  std::vector<VarSet> terms;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Throws ValidationError on an empty member or a disjointness violation.
/// An empty family is allowed here; recognizer validation is stricter.
void check_disjoint_family(const std::vector<VarSet>& sets, const char* what);

/// C with the variables of `ones` set to 1 and the rest to 0.
inline bool cnf_value_ones(const ReadOnceCnf& c, const VarSet& ones) {
  for (const auto& clause : c.clauses)
    if (!clause.intersects(ones)) return false;
  return true;
}

/// D with the variables of `ones` set to 1 and the rest to 0.
inline bool dnf_value_ones(const ReadOnceDnf& d, const VarSet& ones) {
  for (const auto& term : d.terms)
    if (term.subset_of(ones)) return true;
  return false;
}

/// C with the variables of `zeros` set to 0 and the rest to 1.
inline bool cnf_value_zeros(const ReadOnceCnf& c, const VarSet& zeros) {
  for (const auto& clause : c.clauses)
    if (clause.subset_of(zeros)) return false;
  return true;
}

/// D with the variables of `zeros` set to 0 and the rest to 1.
inline bool dnf_value_zeros(const ReadOnceDnf& d, const VarSet& zeros) {
  for (const auto& term : d.terms)
    if (!term.intersects(zeros)) return true;
  return false;
}

VarSet family_support(const std::vector<VarSet>& sets);

/// Formula view of a non-empty CNF/DNF (for oracle cross-checks).
FormulaPtr to_formula(const ReadOnceCnf& c);
FormulaPtr to_formula(const ReadOnceDnf& d);

}  // namespace roc

#endif

#include "roc/families.hpp"

#include <string>

namespace roc {

void check_disjoint_family(const std::vector<VarSet>& sets, const char* what) {
  VarSet seen;
  for (const auto& s : sets) {
    if (s.empty())
      throw ValidationError(std::string("empty ") + what);
    if (s.intersects(seen))
      throw ValidationError(std::string(what) + "s not disjoint");
    seen = seen.set_union(s);
  }
}

VarSet family_support(const std::vector<VarSet>& sets) {
  VarSet out;
  for (const auto& s : sets) out = out.set_union(s);
  return out;
}

namespace {

FormulaPtr gate_of_sets(const std::vector<VarSet>& sets, bool outer_and) {
  if (sets.empty())
    throw ValidationError("cannot build a formula from an empty family");
  std::vector<FormulaPtr> groups;
  groups.reserve(sets.size());
  for (const auto& s : sets) {
    std::vector<FormulaPtr> vars;
    vars.reserve(s.size());
    for (int v : s) vars.push_back(Formula::var(v));
    groups.push_back(outer_and ? Formula::disj(std::move(vars))
                               : Formula::conj(std::move(vars)));
  }
  return outer_and ? Formula::conj(std::move(groups))
                   : Formula::disj(std::move(groups));
}

}  // namespace

FormulaPtr to_formula(const ReadOnceCnf& c) { return gate_of_sets(c.clauses, true); }
FormulaPtr to_formula(const ReadOnceDnf& d) { return gate_of_sets(d.terms, false); }

}  // namespace roc

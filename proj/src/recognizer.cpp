#include "roc/recognizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "roc/read2.hpp"

namespace roc {

Instance validate(std::vector<VarSet> clauses, std::vector<VarSet> terms,
                  const VarRegistry& registry) {
  if (clauses.empty()) throw ValidationError("empty clause");
  if (terms.empty()) throw ValidationError("empty term");
  check_disjoint_family(clauses, "clause");
  check_disjoint_family(terms, "term");

  VarSet d_support = family_support(terms);
  VarSet c_support = family_support(clauses);
  for (std::size_t v = 0; v < registry.size(); ++v) {
    int id = static_cast<int>(v);
    if (!d_support.contains(id)) {
      if (c_support.contains(id))
        throw ValidationError("variable of C missing from D: " +
                              registry.name(id));
      throw ValidationError("D does not cover all variables: " +
                            registry.name(id));
    }
  }
  return Instance{ReadOnceCnf{std::move(clauses)}, ReadOnceDnf{std::move(terms)},
                  registry.size()};
}

bool is_left_set(const Instance& inst, const VarSet& s) {
  std::size_t hits = 0;
  for (const VarSet& clause : inst.C.clauses) {
    std::size_t k = clause.intersection_size(s);
    if (k != 1) return false;
    hits += k;
  }
  // One hit per clause and nothing outside the union of clauses.
  return hits == s.size();
}

std::vector<std::size_t> right_minterms(const Instance& inst) {
  std::vector<std::size_t> out;
  const std::size_t m = inst.C.clauses.size();
  for (std::size_t j = 0; j < inst.D.terms.size(); ++j) {
    const VarSet& term = inst.D.terms[j];
    // A left set properly inside D_j exists iff every clause meets D_j
    // and D_j has room beyond one variable per clause.
    bool all_clauses_meet = true;
    for (const VarSet& clause : inst.C.clauses)
      if (!clause.intersects(term)) {
        all_clauses_meet = false;
        break;
      }
    if (!(all_clauses_meet && term.size() > m)) out.push_back(j);
  }
  return out;
}

std::optional<VarSet> maxterm_with_two_clauses(const Instance& inst,
                                               std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("u and v must be distinct");
  VarSet base = inst.C.clauses.at(u).set_union(inst.C.clauses.at(v));
  for (const VarSet& term : inst.D.terms)
    if (base.intersection_size(term) > 1) return std::nullopt;
  VarSet t = base;
  for (const VarSet& term : inst.D.terms)
    if (!term.intersects(base)) t.insert(term.min_id());
  return t;
}

std::optional<VarSet> maxterm_with_clause(const Instance& inst, std::size_t i) {
  const VarSet& ci = inst.C.clauses.at(i);

  VarSet big_r;
  ReadOnceDnf hat_d;
  for (const VarSet& term : inst.D.terms) {
    if (term.intersects(ci))
      big_r = big_r.set_union(term);
    else
      hat_d.terms.push_back(term);
  }
  ReadOnceCnf hat_c;
  for (const VarSet& clause : inst.C.clauses)
    if (!clause.intersects(big_r)) hat_c.clauses.push_back(clause);

  std::optional<VarSet> w = tautology_zero_witness(hat_c, hat_d);
  if (!w) return std::nullopt;
  return w->set_union(ci);
}

std::optional<VarSet> left_minterm_with_pair(const Instance& inst, int a, int b) {
  if (a == b) throw std::invalid_argument("a and b must be distinct");
  VarSet pair{a, b};
  VarSet c_support = family_support(inst.C.clauses);
  if (!pair.subset_of(c_support)) return std::nullopt;
  for (const VarSet& clause : inst.C.clauses)
    if (clause.contains(a) && clause.contains(b)) return std::nullopt;

  ReadOnceCnf hat_c;
  for (const VarSet& clause : inst.C.clauses)
    if (!clause.contains(a) && !clause.contains(b))
      hat_c.clauses.push_back(clause);

  ReadOnceDnf hat_d;
  for (const VarSet& term : inst.D.terms) {
    if (term.contains(a) && term.contains(b)) {
      // A left minterm absorbing this whole term must equal it, and a left
      // set equal to a term is always a minterm (no other term fits inside).
      if (is_left_set(inst, term)) return term;
      if (term == pair) return std::nullopt;
      hat_d.terms.push_back(term.set_difference(pair));
      continue;
    }
    VarSet reduced = term.set_difference(pair);
    if (reduced.empty()) return std::nullopt;  // singleton term inside {a,b}
    hat_d.terms.push_back(reduced);
  }

  auto [taut, s0] = implies_tautology(hat_c, hat_d);
  if (taut) return std::nullopt;
  return s0->set_union(pair);
}

std::optional<VarSet> maxterm_with_clause_plus(const Instance& inst,
                                               std::size_t u, int p) {
  const VarSet& cu = inst.C.clauses.at(u);
  if (cu.contains(p)) throw std::invalid_argument("p must lie outside C_u");

  std::size_t vd = inst.D.terms.size();
  for (std::size_t j = 0; j < inst.D.terms.size(); ++j)
    if (inst.D.terms[j].contains(p)) {
      vd = j;
      break;
    }
  if (vd == inst.D.terms.size())
    throw std::invalid_argument("p does not occur in D");
  if (cu.intersects(inst.D.terms[vd]))
    throw std::invalid_argument("C_u must be disjoint from p's term");

  VarSet blocker = inst.D.terms[vd];
  blocker.erase(p);
  ReadOnceDnf hat_d;
  for (std::size_t j = 0; j < inst.D.terms.size(); ++j) {
    if (j == vd) continue;
    if (inst.D.terms[j].intersects(cu))
      blocker = blocker.set_union(inst.D.terms[j]);
    else
      hat_d.terms.push_back(inst.D.terms[j]);
  }

  ReadOnceCnf hat_c;
  for (const VarSet& clause : inst.C.clauses) {
    if (clause.intersects(blocker)) continue;
    VarSet reduced = clause;
    reduced.erase(p);
    // A clause equal to {p} would force a maxterm containing two clauses.
    if (reduced.empty()) return std::nullopt;
    hat_c.clauses.push_back(reduced);
  }

  std::optional<VarSet> w = tautology_zero_witness(hat_c, hat_d);
  if (!w) return std::nullopt;
  VarSet t = w->set_union(cu);
  t.insert(p);
  return t;
}

RecognitionResult recognize(const Instance& inst) {
  // Step 1: if C -> D is a tautology, C-or-D is equivalent to the
  // read-once formula D.
  auto [taut, s0] = implies_tautology(inst.C, inst.D);
  if (taut) return {Verdict::ReadOnce, std::nullopt, Step::Tautology};

  // Step 2: a maxterm containing two distinct clauses meets the left
  // minterm S0 twice.
  const std::size_t m = inst.C.clauses.size();
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v)
      if (auto t = maxterm_with_two_clauses(inst, u, v))
        return {Verdict::NotReadOnce, std::make_pair(*s0, *t), Step::TwoClauses};

  // Step 3: a right minterm sharing two variables with some clause that
  // extends to a maxterm.
  std::vector<std::size_t> rm = right_minterms(inst);
  for (std::size_t u = 0; u < m; ++u) {
    const VarSet& cu = inst.C.clauses[u];
    if (cu.size() < 2) continue;
    std::optional<std::optional<VarSet>> cached_t;
    for (int p : cu) {
      // The term containing p is unique; a right minterm through {p, q}
      // must be that term.
      auto owner = std::find_if(
          inst.D.terms.begin(), inst.D.terms.end(),
          [&](const VarSet& term) { return term.contains(p); });
      std::size_t j = static_cast<std::size_t>(owner - inst.D.terms.begin());
      if (std::find(rm.begin(), rm.end(), j) == rm.end()) continue;
      for (int q : cu) {
        if (q <= p || !owner->contains(q)) continue;
        if (!cached_t) cached_t = maxterm_with_clause(inst, u);
        if (*cached_t)
          return {Verdict::NotReadOnce, std::make_pair(*owner, **cached_t),
                  Step::RightMinterm};
      }
    }
  }

  // Step 4: a left minterm through {p, q} against a maxterm through
  // C_u and p, for disjoint C_u, D_v with q in C_u and p in D_v.
  for (std::size_t u = 0; u < m; ++u) {
    const VarSet& cu = inst.C.clauses[u];
    for (std::size_t v = 0; v < inst.D.terms.size(); ++v) {
      const VarSet& dv = inst.D.terms[v];
      if (cu.intersects(dv)) continue;
      for (int q : cu)
        for (int p : dv) {
          std::optional<VarSet> s = left_minterm_with_pair(inst, p, q);
          if (!s) continue;
          if (auto t = maxterm_with_clause_plus(inst, u, p))
            return {Verdict::NotReadOnce, std::make_pair(*s, *t),
                    Step::LeftMinterm};
        }
    }
  }

  return {Verdict::ReadOnce, std::nullopt, Step::Final};
}

}  // namespace roc

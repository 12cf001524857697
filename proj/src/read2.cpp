#include "roc/read2.hpp"

#include <algorithm>
#include <map>

namespace roc {

void LiteralCnf::add_clause(std::vector<Literal> lits) {
  std::sort(lits.begin(), lits.end(), [](const Literal& a, const Literal& b) {
    return a.var != b.var ? a.var < b.var : a.positive < b.positive;
  });
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 1; i < lits.size(); ++i) {
    if (lits[i].var == lits[i - 1].var) return;  // tautological, drop
  }
  for (const Literal& l : lits)
    width_ = std::max(width_, static_cast<std::size_t>(l.var) + 1);
  clauses_.push_back(std::move(lits));
}

bool LiteralCnf::is_read2() const {
  std::map<int, int> occ;
  for (const auto& cl : clauses_)
    for (const Literal& l : cl)
      if (++occ[l.var] > 2) return false;
  return true;
}

namespace {

struct Record {
  bool fixed;            // fixed value vs resolved variable
  int var;
  bool value;            // for fixed records
  std::vector<Literal> pos_rest;  // for resolved: the +var clause minus +var
};

using Clause = boost::container::small_vector<Literal, 6>;

bool clause_has(const Clause& cl, const Literal& l) {
  for (const Literal& x : cl)
    if (x == l) return true;
  return false;
}

void erase_literal(Clause& cl, const Literal& l) {
  cl.erase(std::remove(cl.begin(), cl.end(), l), cl.end());
}

}  // namespace

SatResult solve_read2(const LiteralCnf& cnf) {
  if (!cnf.is_read2()) throw NotRead2Error();

  std::vector<Clause> cls;
  cls.reserve(cnf.clauses().size());
  for (const auto& cl : cnf.clauses()) cls.emplace_back(cl.begin(), cl.end());

  std::vector<Record> records;
  bool unsat = false;

  auto remove_satisfied = [&](const Literal& l) {
    // Deletes clauses containing l; keeps clause order.
    cls.erase(std::remove_if(cls.begin(), cls.end(),
                             [&](const Clause& cl) { return clause_has(cl, l); }),
              cls.end());
  };

  while (true) {
    if (std::any_of(cls.begin(), cls.end(),
                    [](const Clause& cl) { return cl.empty(); })) {
      unsat = true;
      break;
    }
    if (cls.empty()) break;

    // Unit propagation: first unit clause in list order.
    auto unit = std::find_if(cls.begin(), cls.end(),
                             [](const Clause& cl) { return cl.size() == 1; });
    if (unit != cls.end()) {
      Literal l = (*unit)[0];
      records.push_back({true, l.var, l.positive, {}});
      remove_satisfied(l);
      Literal neg{l.var, !l.positive};
      for (Clause& cl : cls) erase_literal(cl, neg);
      continue;
    }

    // Occurrence census (every variable has at most 2 occurrences).
    std::map<int, std::pair<int, int>> occ;  // var -> (pos, neg)
    for (const Clause& cl : cls)
      for (const Literal& l : cl)
        (l.positive ? occ[l.var].first : occ[l.var].second)++;

    // Pure-literal elimination, lowest variable id first.
    bool stepped = false;
    for (const auto& [v, pn] : occ) {
      if (pn.first == 0 || pn.second == 0) {
        bool value = pn.first > 0;
        records.push_back({true, v, value, {}});
        remove_satisfied(Literal{v, value});
        stepped = true;
        break;
      }
    }
    if (stepped) continue;

    // Resolution on the lowest variable with one positive and one negative
    // occurrence; with no units and no pures, every variable qualifies.
    int v = occ.begin()->first;
    auto pos_it = std::find_if(cls.begin(), cls.end(), [&](const Clause& cl) {
      return clause_has(cl, Literal{v, true});
    });
    auto neg_it = std::find_if(cls.begin(), cls.end(), [&](const Clause& cl) {
      return clause_has(cl, Literal{v, false});
    });
    Clause pos_rest = *pos_it;
    erase_literal(pos_rest, Literal{v, true});
    Clause neg_rest = *neg_it;
    erase_literal(neg_rest, Literal{v, false});

    records.push_back(
        {false, v, false, std::vector<Literal>(pos_rest.begin(), pos_rest.end())});

    Clause resolvent = pos_rest;
    for (const Literal& l : neg_rest)
      if (!clause_has(resolvent, l)) resolvent.push_back(l);
    bool tautological = false;
    for (const Literal& l : resolvent)
      if (clause_has(resolvent, Literal{l.var, !l.positive})) {
        tautological = true;
        break;
      }

    if (neg_it > pos_it) {
      cls.erase(neg_it);
      cls.erase(pos_it);
    } else {
      cls.erase(pos_it);
      cls.erase(neg_it);
    }
    if (!tautological) cls.push_back(std::move(resolvent));
  }

  if (unsat) return {false, std::nullopt};

  // Replay eliminations in reverse; variables never recorded keep 1.
  Assignment model(cnf.width());
  for (std::size_t v = 0; v < cnf.width(); ++v) model.set(static_cast<int>(v), true);
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    if (it->fixed) {
      model.set(it->var, it->value);
    } else {
      bool rest_true = std::any_of(
          it->pos_rest.begin(), it->pos_rest.end(),
          [&](const Literal& l) { return model.test(l.var) == l.positive; });
      model.set(it->var, !rest_true);
    }
  }
  return {true, model};
}

namespace {

LiteralCnf encode_c_and_not_d(const ReadOnceCnf& c, const ReadOnceDnf& d) {
  LiteralCnf cnf;
  for (const VarSet& clause : c.clauses) {
    std::vector<Literal> lits;
    for (int v : clause) lits.push_back({v, true});
    cnf.add_clause(std::move(lits));
  }
  for (const VarSet& term : d.terms) {
    std::vector<Literal> lits;
    for (int v : term) lits.push_back({v, false});
    cnf.add_clause(std::move(lits));
  }
  return cnf;
}

}  // namespace

std::pair<bool, std::optional<VarSet>> implies_tautology(const ReadOnceCnf& c,
                                                         const ReadOnceDnf& d) {
  SatResult res = solve_read2(encode_c_and_not_d(c, d));
  if (!res.satisfiable) return {true, std::nullopt};

  VarSet mentioned =
      family_support(c.clauses).set_union(family_support(d.terms));
  VarSet s0;
  for (int v : mentioned)
    if (res.model->test(v)) s0.insert(v);

  // Greedy inclusion-minimization, ascending variable id. Shrinking can
  // only keep D at 0, so only C constrains removals.
  for (int v : VarSet(s0)) {
    VarSet smaller = s0;
    smaller.erase(v);
    if (cnf_value_ones(c, smaller)) s0 = smaller;
  }
  return {false, s0};
}

std::optional<VarSet> tautology_zero_witness(const ReadOnceCnf& c,
                                             const ReadOnceDnf& d) {
  if (d.terms.empty()) return VarSet{};  // empty DNF is the constant 0
  SatResult res = solve_read2(encode_c_and_not_d(c, d));
  if (!res.satisfiable) return std::nullopt;

  VarSet w;
  for (int v : family_support(d.terms))
    if (!res.model->test(v)) w.insert(v);

  // Minimize: keep every term of D intersected; C only gains ones.
  for (int v : VarSet(w)) {
    VarSet smaller = w;
    smaller.erase(v);
    if (!dnf_value_zeros(d, smaller)) w = smaller;
  }
  return w;
}

}  // namespace roc

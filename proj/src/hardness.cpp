#include "roc/hardness.hpp"

#include <algorithm>
#include <string>

namespace roc {

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (u < 1 || v < 1 || u > n || v > n)
    throw std::invalid_argument("vertex out of range");
  edges.insert({std::min(u, v), std::max(u, v)});
}

bool Graph::adjacent(int u, int v) const {
  return edges.count({std::min(u, v), std::max(u, v)}) > 0;
}

std::vector<ConfEntry> build_conf(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("k < 2: the game needs two cells");
  if (g.n < 1) throw std::invalid_argument("graph has no vertices");
  std::vector<ConfEntry> out;
  for (int i = 1; i <= k; ++i)
    for (int u = 1; u <= g.n; ++u)
      for (int j = i + 1; j <= k; ++j)
        for (int v = 1; v <= g.n; ++v)
          if (!g.adjacent(u, v)) out.push_back({i, u, j, v});
  std::sort(out.begin(), out.end(), [](const ConfEntry& a, const ConfEntry& b) {
    if (a.i != b.i) return a.i < b.i;
    if (a.u != b.u) return a.u < b.u;
    if (a.j != b.j) return a.j < b.j;
    return a.v < b.v;
  });
  return out;
}

namespace {

std::string outcome_name(int i, int u, int j, int v) {
  return "x_" + std::to_string(i) + "_" + std::to_string(u) + "_" +
         std::to_string(j) + "_" + std::to_string(v);
}

}  // namespace

ReductionOutput build_reduction(const Graph& g, int k) {
  ReductionOutput out;
  out.conf = build_conf(g, k);
  out.registry = std::make_shared<VarRegistry>();

  // Two outcome variables per configuration, interned in configuration
  // order: the cell touched first comes first in the name.
  std::vector<int> first_var(out.conf.size()), second_var(out.conf.size());
  for (std::size_t c = 0; c < out.conf.size(); ++c) {
    const ConfEntry& e = out.conf[c];
    first_var[c] = out.registry->intern(outcome_name(e.i, e.u, e.j, e.v));
    second_var[c] = out.registry->intern(outcome_name(e.j, e.v, e.i, e.u));
    out.dn.terms.push_back(VarSet{first_var[c], second_var[c]});
  }

  // Psi: AND over cells, OR over Alice's vertex, AND over Merlin's replies.
  std::vector<FormulaPtr> cells;
  for (int i = 1; i <= k; ++i) {
    std::vector<FormulaPtr> choices;
    bool cell_constant_true = false;
    for (int u = 1; u <= g.n; ++u) {
      // Outcomes in which (i, u) was touched first, ascending (j, v).
      std::vector<std::pair<std::pair<int, int>, int>> replies;
      for (std::size_t c = 0; c < out.conf.size(); ++c) {
        const ConfEntry& e = out.conf[c];
        if (e.i == i && e.u == u) replies.push_back({{e.j, e.v}, first_var[c]});
        if (e.j == i && e.v == u) replies.push_back({{e.i, e.u}, second_var[c]});
      }
      std::sort(replies.begin(), replies.end());
      if (replies.empty()) {
        // Merlin has no legal move: this branch is constantly true.
        cell_constant_true = true;
        break;
      }
      std::vector<FormulaPtr> vars;
      for (const auto& [jv, id] : replies) vars.push_back(Formula::var(id));
      choices.push_back(Formula::conj(std::move(vars)));
    }
    if (cell_constant_true) continue;
    cells.push_back(Formula::disj(std::move(choices)));
  }
  if (cells.empty())
    throw std::logic_error("psi simplified to a constant");
  out.psi = Formula::conj(std::move(cells));
  return out;
}

FormulaPtr read2_wrapper(const FormulaPtr& psi, const ReadOnceDnf& dn,
                             VarRegistry& registry) {
  int w[4];
  for (int i = 0; i < 4; ++i) {
    std::string name = "w" + std::to_string(i + 1);
    if (registry.find(name))
      throw std::invalid_argument("w-variables collide with instance variables");
    w[i] = registry.intern(name);
  }
  auto pair_term = [&](int a, int b) {
    return Formula::conj({Formula::var(w[a]), Formula::var(w[b])});
  };
  std::vector<FormulaPtr> right;
  for (const VarSet& term : dn.terms) {
    std::vector<FormulaPtr> vars;
    for (int v : term) vars.push_back(Formula::var(v));
    right.push_back(Formula::conj(std::move(vars)));
  }
  right.push_back(pair_term(0, 1));
  right.push_back(pair_term(2, 3));
  return Formula::conj({psi, Formula::disj({pair_term(0, 2), pair_term(1, 3)}),
                        Formula::disj(std::move(right))});
}

FormulaPtr non_read_once_gadget(VarRegistry& registry) {
  int w[4];
  for (int i = 0; i < 4; ++i)
    w[i] = registry.intern("w" + std::to_string(i + 1));
  auto triple = [&](int a, int b, int c) {
    return Formula::conj({Formula::var(w[a]), Formula::var(w[b]), Formula::var(w[c])});
  };
  return Formula::disj(
      {triple(1, 2, 3), triple(0, 2, 3), triple(0, 1, 3), triple(0, 1, 2)});
}

bool has_clique(const Graph& g, int k) {
  if (k <= 0) return true;
  if (k > g.n) return false;
  std::vector<int> pick;
  // Depth-first over ascending vertex choices.
  auto extend = [&](auto&& self, int from, int remaining) -> bool {
    if (remaining == 0) return true;
    for (int v = from; v <= g.n - remaining + 1; ++v) {
      bool ok = true;
      for (int p : pick)
        if (!g.adjacent(p, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick.push_back(v);
      if (self(self, v + 1, remaining - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return extend(extend, 1, k);
}

namespace {

bool is_var_conjunction(const Formula& f) {
  if (f.kind() == NodeKind::Var) return true;
  if (f.kind() != NodeKind::And) return false;
  for (const auto& child : f.children())
    if (child->kind() != NodeKind::Var) return false;
  return true;
}

bool is_or_of_conjunctions(const Formula& f) {
  if (is_var_conjunction(f)) return true;  // collapsed OR
  if (f.kind() != NodeKind::Or) return false;
  for (const auto& child : f.children())
    if (!is_var_conjunction(*child)) return false;
  return true;
}

}  // namespace

bool is_and_or_and_shape(const Formula& f) {
  if (f.kind() != NodeKind::And) return is_or_of_conjunctions(f);
  for (const auto& child : f.children())
    if (!is_or_of_conjunctions(*child)) return false;
  return true;
}

}  // namespace roc

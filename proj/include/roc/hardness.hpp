#ifndef ROC_HARDNESS_HPP
#define ROC_HARDNESS_HPP

#include <memory>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "roc/families.hpp"
#include "roc/formula.hpp"

namespace roc {

/// Simple undirected graph, vertices 1..n, no self-loops.
struct Graph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // stored with first < second

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
};

/// An end configuration of the cell game: distinct cells i < j holding
/// non-adjacent (possibly equal) vertices u and v.
struct ConfEntry {
  int i, u, j, v;
  bool operator==(const ConfEntry&) const = default;
};

/// All configurations, deterministic order: ascending (i, u, j, v).
std::vector<ConfEntry> build_conf(const Graph& g, int k);

struct ReductionOutput {
  FormulaPtr psi;                         // and-or-and, read-once
  ReadOnceDnf dn;                         // one two-variable term per entry
  std::vector<ConfEntry> conf;
  std::shared_ptr<VarRegistry> registry;  // names x_i_u_j_v
};

/// The clique reduction: G has a k-clique iff psi -> dn is not a tautology.
ReductionOutput build_reduction(const Graph& g, int k);

/// Wraps psi and dn with fresh variables w1..w4 so that psi -> dn is a
/// tautology iff the wrapper computes a read-once function.
FormulaPtr read2_wrapper(const FormulaPtr& psi, const ReadOnceDnf& dn,
                             VarRegistry& registry);

/// The fixed four-variable non-read-once witness formula
/// w2w3w4 | w1w3w4 | w1w2w4 | w1w2w3.
FormulaPtr non_read_once_gadget(VarRegistry& registry);

/// Exhaustive vertex-subset scan.
bool has_clique(const Graph& g, int k);

/// Structural check: an AND of ORs of ANDs of variables, with collapsed
/// single-child gates allowed below the top gate.
bool is_and_or_and_shape(const Formula& f);

}  // namespace roc

#endif

#ifndef ROC_IO_HPP
#define ROC_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "roc/formula.hpp"
#include "roc/hardness.hpp"
#include "roc/varset.hpp"

namespace roc {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// CNF/DNF file format: one clause or term per line, whitespace-separated
/// variable names; lines starting with '#' and blank lines are skipped.
std::vector<VarSet> parse_set_file(const std::string& path,
                                   VarRegistry& registry);

/// Whole file is one formula in the expression grammar ('#' comment lines
/// are stripped first).
FormulaPtr parse_formula_file(const std::string& path, VarRegistry& registry);

/// Graph file: first line "n m", then m lines "u v" with 1-indexed vertices.
Graph parse_graph_file(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Renders a clause/term family in the set-file format.
std::string render_set_file(const std::vector<VarSet>& sets,
                            const VarRegistry& registry);

/// Variable names of a set, sorted by name.
std::vector<std::string> sorted_names(const VarSet& s,
                                      const VarRegistry& registry);

}  // namespace roc

#endif

#ifndef ROC_TERMS_HPP
#define ROC_TERMS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "roc/formula.hpp"
#include "roc/varset.hpp"

namespace roc {

struct VarLimitError : std::runtime_error {
  VarLimitError() : std::runtime_error("variable limit exceeded") {}
};

enum class TermKind { Minterm, Maxterm };

struct TermList {
  TermKind kind;
  std::vector<VarSet> sets;
};

/// Bit i of the result is the value of f on the assignment whose bit j is
/// (i >> j) & 1. Packed into 64-bit words.
std::vector<std::uint64_t> truth_table(const Formula& f, std::size_t n_vars);

/// Exhaustive enumeration of all minterms (minimal 1-certificates) or
/// maxterms (minimal 0-certificates), ordered by size then lexicographically.
TermList enumerate_terms(const Formula& f, TermKind kind, std::size_t n_vars,
                         std::size_t var_limit = 24);

struct ReadOnceVerdict {
  bool read_once;
  std::optional<std::pair<VarSet, VarSet>> witness;  // (minterm, maxterm)
};

/// Ground-truth read-once test: f is read-once iff every minterm and every
/// maxterm intersect in exactly one variable. On failure, returns the first
/// violating pair in enumeration order.
ReadOnceVerdict is_read_once_oracle(const Formula& f, std::size_t n_vars,
                                    std::size_t var_limit = 24);

/// True iff p implies q on every assignment.
bool brute_tautology(const Formula& p, const Formula& q, std::size_t n_vars,
                     std::size_t var_limit = 24);

/// Definitional checks, independent of any enumeration or pipeline.
bool is_minterm(const Formula& f, const VarSet& s, std::size_t n_vars);
bool is_maxterm(const Formula& f, const VarSet& t, std::size_t n_vars);

}  // namespace roc

#endif

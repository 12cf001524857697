#include "roc/terms.hpp"

#include <algorithm>
#include <bit>

namespace roc {

namespace {

constexpr std::uint64_t kVarPattern[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

std::size_t word_count(std::size_t n_vars) {
  std::size_t bits = std::size_t{1} << n_vars;
  return (bits + 63) / 64;
}

void var_table(int v, std::size_t n_vars, std::vector<std::uint64_t>& out) {
  std::size_t words = word_count(n_vars);
  out.resize(words);
  if (v < 6) {
    std::fill(out.begin(), out.end(), kVarPattern[v]);
  } else {
    for (std::size_t w = 0; w < words; ++w)
      out[w] = ((w >> (v - 6)) & 1) ? ~std::uint64_t{0} : 0;
  }
}

void table_rec(const Formula& f, std::size_t n_vars,
               std::vector<std::uint64_t>& out) {
  if (f.kind() == NodeKind::Var) {
    var_table(f.var_id(), n_vars, out);
    return;
  }
  table_rec(*f.children()[0], n_vars, out);
  std::vector<std::uint64_t> child;
  for (std::size_t i = 1; i < f.children().size(); ++i) {
    table_rec(*f.children()[i], n_vars, child);
    if (f.kind() == NodeKind::And) {
      for (std::size_t w = 0; w < out.size(); ++w) out[w] &= child[w];
    } else {
      for (std::size_t w = 0; w < out.size(); ++w) out[w] |= child[w];
    }
  }
}

inline bool table_bit(const std::vector<std::uint64_t>& t, std::uint64_t idx) {
  return (t[idx >> 6] >> (idx & 63)) & 1;
}

void check_limit(std::size_t n_vars, std::size_t var_limit) {
  if (n_vars > var_limit || n_vars >= 32) throw VarLimitError();
}

}  // namespace

std::vector<std::uint64_t> truth_table(const Formula& f, std::size_t n_vars) {
  std::vector<std::uint64_t> out;
  table_rec(f, n_vars, out);
  if (n_vars < 6) {
    out[0] &= (std::uint64_t{1} << (std::uint64_t{1} << n_vars)) - 1;
  }
  return out;
}

TermList enumerate_terms(const Formula& f, TermKind kind, std::size_t n_vars,
                         std::size_t var_limit) {
  check_limit(n_vars, var_limit);
  std::vector<std::uint64_t> table = truth_table(f, n_vars);
  const std::uint64_t full = (n_vars >= 64 ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << n_vars) - 1);
  TermList out{kind, {}};
  const std::uint64_t total = std::uint64_t{1} << n_vars;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool minimal;
    if (kind == TermKind::Minterm) {
      // S -> 1 is the assignment equal to mask itself.
      if (!table_bit(table, mask)) continue;
      minimal = true;
      for (std::uint64_t rest = mask; rest != 0;) {
        std::uint64_t bit = rest & (~rest + 1);
        rest ^= bit;
        if (table_bit(table, mask ^ bit)) {
          minimal = false;
          break;
        }
      }
    } else {
      // T -> 0 is the complement of mask.
      if (table_bit(table, full & ~mask)) continue;
      minimal = true;
      for (std::uint64_t rest = mask; rest != 0;) {
        std::uint64_t bit = rest & (~rest + 1);
        rest ^= bit;
        if (!table_bit(table, (full & ~mask) | bit)) {
          minimal = false;
          break;
        }
      }
    }
    if (minimal) out.sets.push_back(VarSet::from_mask(mask));
  }
  std::sort(out.sets.begin(), out.sets.end(), [](const VarSet& a, const VarSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

ReadOnceVerdict is_read_once_oracle(const Formula& f, std::size_t n_vars,
                                    std::size_t var_limit) {
  TermList minterms = enumerate_terms(f, TermKind::Minterm, n_vars, var_limit);
  TermList maxterms = enumerate_terms(f, TermKind::Maxterm, n_vars, var_limit);
  for (const auto& s : minterms.sets)
    for (const auto& t : maxterms.sets)
      if (s.intersection_size(t) != 1) return {false, std::make_pair(s, t)};
  return {true, std::nullopt};
}

bool brute_tautology(const Formula& p, const Formula& q, std::size_t n_vars,
                     std::size_t var_limit) {
  check_limit(n_vars, var_limit);
  std::vector<std::uint64_t> tp = truth_table(p, n_vars);
  std::vector<std::uint64_t> tq = truth_table(q, n_vars);
  for (std::size_t w = 0; w < tp.size(); ++w)
    if (tp[w] & ~tq[w]) return false;
  return true;
}

bool is_minterm(const Formula& f, const VarSet& s, std::size_t n_vars) {
  if (!eval(f, Assignment::set_to(s, true, n_vars))) return false;
  for (int v : s) {
    VarSet smaller = s;
    smaller.erase(v);
    if (eval(f, Assignment::set_to(smaller, true, n_vars))) return false;
  }
  return true;
}

bool is_maxterm(const Formula& f, const VarSet& t, std::size_t n_vars) {
  if (eval(f, Assignment::set_to(t, false, n_vars))) return false;
  for (int v : t) {
    VarSet smaller = t;
    smaller.erase(v);
    if (!eval(f, Assignment::set_to(smaller, false, n_vars))) return false;
  }
  return true;
}

}  // namespace roc

#include <doctest.h>

#include "roc/hardness.hpp"
#include "roc/terms.hpp"
#include "testgen.hpp"

using namespace roc;

namespace {

VarSet named(const VarRegistry& reg, std::initializer_list<const char*> names) {
  VarSet s;
  for (const char* n : names) s.insert(*reg.find(n));
  return s;
}

}  // namespace

TEST_CASE("truth table matches eval bit by bit") {
  roctest::Rng rng(31);
  for (int it = 0; it < 200; ++it) {
    int n = roctest::rand_int(rng, 1, 9);
    FormulaPtr f = roctest::random_formula(rng, n);
    auto table = truth_table(*f, n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      bool bit = (table[mask >> 6] >> (mask & 63)) & 1;
      CHECK(bit == eval(*f, Assignment::from_mask(mask, n)));
    }
  }
}

TEST_CASE("term enumeration on x1y1 | x2y2") {
  VarRegistry reg;
  FormulaPtr f = parse_formula("x1&y1 | x2&y2", reg);

  TermList mins = enumerate_terms(*f, TermKind::Minterm, reg.size());
  REQUIRE(mins.sets.size() == 2);
  CHECK(mins.sets[0] == named(reg, {"x1", "y1"}));
  CHECK(mins.sets[1] == named(reg, {"x2", "y2"}));

  TermList maxs = enumerate_terms(*f, TermKind::Maxterm, reg.size());
  REQUIRE(maxs.sets.size() == 4);
  CHECK(maxs.sets[0] == named(reg, {"x1", "x2"}));
  CHECK(maxs.sets[1] == named(reg, {"x1", "y2"}));
  CHECK(maxs.sets[2] == named(reg, {"y1", "x2"}));
  CHECK(maxs.sets[3] == named(reg, {"y1", "y2"}));
}

TEST_CASE("terms of a bare conjunction and disjunction") {
  VarRegistry reg;
  FormulaPtr conj = parse_formula("x1 & x2 & x3", reg);
  TermList m1 = enumerate_terms(*conj, TermKind::Minterm, reg.size());
  REQUIRE(m1.sets.size() == 1);
  CHECK(m1.sets[0] == VarSet({0, 1, 2}));
  TermList t1 = enumerate_terms(*conj, TermKind::Maxterm, reg.size());
  REQUIRE(t1.sets.size() == 3);

  FormulaPtr disj = parse_formula("x1 | x2 | x3", reg);
  TermList m2 = enumerate_terms(*disj, TermKind::Minterm, reg.size());
  REQUIRE(m2.sets.size() == 3);
  TermList t2 = enumerate_terms(*disj, TermKind::Maxterm, reg.size());
  REQUIRE(t2.sets.size() == 1);
  CHECK(t2.sets[0] == VarSet({0, 1, 2}));
}

TEST_CASE("enumerated terms are exactly the definitional ones") {
  roctest::Rng rng(37);
  for (int it = 0; it < 100; ++it) {
    int n = roctest::rand_int(rng, 2, 8);
    FormulaPtr f = roctest::random_formula(rng, n);
    TermList mins = enumerate_terms(*f, TermKind::Minterm, n);
    TermList maxs = enumerate_terms(*f, TermKind::Maxterm, n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      VarSet s = VarSet::from_mask(mask);
      bool in_mins =
          std::find(mins.sets.begin(), mins.sets.end(), s) != mins.sets.end();
      bool in_maxs =
          std::find(maxs.sets.begin(), maxs.sets.end(), s) != maxs.sets.end();
      CHECK(in_mins == is_minterm(*f, s, n));
      CHECK(in_maxs == is_maxterm(*f, s, n));
    }
  }
}

TEST_CASE("term lists are ordered and antichains") {
  roctest::Rng rng(41);
  for (int it = 0; it < 100; ++it) {
    int n = roctest::rand_int(rng, 2, 8);
    FormulaPtr f = roctest::random_formula(rng, n);
    for (TermKind kind : {TermKind::Minterm, TermKind::Maxterm}) {
      TermList list = enumerate_terms(*f, kind, n);
      for (std::size_t i = 0; i + 1 < list.sets.size(); ++i) {
        const VarSet& a = list.sets[i];
        const VarSet& b = list.sets[i + 1];
        CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
      }
      for (std::size_t i = 0; i < list.sets.size(); ++i)
        for (std::size_t j = 0; j < list.sets.size(); ++j)
          if (i != j) CHECK_FALSE(list.sets[i].subset_of(list.sets[j]));
    }
  }
}

TEST_CASE("read-once oracle on fixed formulas") {
  VarRegistry reg;
  FormulaPtr once = parse_formula("(x1 | x2&x3) & (y1 | y2)", reg);
  CHECK(is_read_once_oracle(*once, reg.size()).read_once);

  VarRegistry reg2;
  FormulaPtr gadget = non_read_once_gadget(reg2);
  ReadOnceVerdict v = is_read_once_oracle(*gadget, reg2.size());
  REQUIRE_FALSE(v.read_once);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->first == named(reg2, {"w1", "w2", "w3"}));
  CHECK(v.witness->second == named(reg2, {"w1", "w2"}));
}

TEST_CASE("oracle accepts every syntactically read-once formula") {
  roctest::Rng rng(43);
  for (int it = 0; it < 200; ++it) {
    int n = roctest::rand_int(rng, 1, 10);
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    FormulaPtr f =
        roctest::random_read_once(rng, ids, roctest::rand_int(rng, 0, 1) == 1);
    ReadOnceVerdict v = is_read_once_oracle(*f, n);
    CHECK(v.read_once);
    CHECK_FALSE(v.witness.has_value());
  }
}

TEST_CASE("oracle witnesses certify rejection") {
  roctest::Rng rng(47);
  int rejected = 0;
  for (int it = 0; it < 2000; ++it) {
    int n = roctest::rand_int(rng, 2, 8);
    FormulaPtr f = roctest::random_formula(rng, n, 4);
    ReadOnceVerdict v = is_read_once_oracle(*f, n);
    if (v.read_once) continue;
    ++rejected;
    REQUIRE(v.witness.has_value());
    CHECK(is_minterm(*f, v.witness->first, n));
    CHECK(is_maxterm(*f, v.witness->second, n));
    CHECK(v.witness->first.intersection_size(v.witness->second) != 1);
  }
  CHECK(rejected > 50);
}

TEST_CASE("brute tautology") {
  VarRegistry reg;
  FormulaPtr c = parse_formula("(x1|x2) & (y1|y2)", reg);
  FormulaPtr d = parse_formula("x1&y1 | x2&y2", reg);
  CHECK_FALSE(brute_tautology(*c, *d, reg.size()));
  CHECK(brute_tautology(*d, *c, reg.size()));
  CHECK(brute_tautology(*c, *c, reg.size()));
}

TEST_CASE("variable limit is enforced") {
  std::vector<int> ids(26);
  std::iota(ids.begin(), ids.end(), 0);
  roctest::Rng rng(1);
  FormulaPtr wide = roctest::random_read_once(rng, ids, true);
  CHECK_THROWS_AS(enumerate_terms(*wide, TermKind::Minterm, 26),
                  VarLimitError);
  CHECK_THROWS_AS(is_read_once_oracle(*wide, 26), VarLimitError);

  // The limit is a parameter, not a constant.
  VarRegistry reg;
  FormulaPtr small = parse_formula("a & b & c & d & e & f & g", reg);
  CHECK_THROWS_AS(enumerate_terms(*small, TermKind::Minterm, 7, 6),
                  VarLimitError);
  CHECK_NOTHROW(enumerate_terms(*small, TermKind::Minterm, 7, 7));
}

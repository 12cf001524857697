#include <doctest.h>

#include <map>

#include "roc/formula.hpp"
#include "roc/terms.hpp"
#include "testgen.hpp"

using namespace roc;

TEST_CASE("parser builds the expected ASTs") {
  VarRegistry reg;
  FormulaPtr f = parse_formula("x1 & (x2 | x3)", reg);
  REQUIRE(f->kind() == NodeKind::And);
  REQUIRE(f->children().size() == 2);
  CHECK(f->children()[0]->kind() == NodeKind::Var);
  CHECK(f->children()[0]->var_id() == *reg.find("x1"));
  CHECK(f->children()[1]->kind() == NodeKind::Or);

  FormulaPtr single = parse_formula("x1", reg);
  CHECK(single->kind() == NodeKind::Var);
  CHECK(single->var_id() == *reg.find("x1"));
}

TEST_CASE("and binds tighter than or") {
  VarRegistry reg;
  FormulaPtr f = parse_formula("a & b | c & d", reg);
  REQUIRE(f->kind() == NodeKind::Or);
  REQUIRE(f->children().size() == 2);
  CHECK(f->children()[0]->kind() == NodeKind::And);
  CHECK(f->children()[1]->kind() == NodeKind::And);
}

TEST_CASE("parser rejects bad input") {
  VarRegistry reg;
  CHECK_THROWS_AS(parse_formula("x1 y1 | x2 y2", reg), ParseError);
  CHECK_THROWS_AS(parse_formula("", reg), ParseError);
  CHECK_THROWS_AS(parse_formula("   \n  ", reg), ParseError);
  CHECK_THROWS_AS(parse_formula("(x1 & x2", reg), ParseError);
  CHECK_THROWS_AS(parse_formula("x1 &", reg), ParseError);
  CHECK_THROWS_WITH_AS(parse_formula("!x1", reg),
                       doctest::Contains("negation not allowed"), ParseError);
  CHECK_THROWS_WITH_AS(parse_formula("x1 & ~x2", reg),
                       doctest::Contains("negation not allowed"), ParseError);
  try {
    parse_formula("x1 |\n| x2", reg);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 1);
  }
}

TEST_CASE("render/parse round trip") {
  VarRegistry reg;
  const char* corpus[] = {
      "x1", "x1 & x2 & x3", "x1 | x2 | x3", "x1 & (x2 | x3)",
      "(x1 | x2) & (y1 | y2)", "((a & b | c) & d | e) & f",
      "w2&w3&w4 | w1&w3&w4 | w1&w2&w4 | w1&w2&w3"};
  for (const char* text : corpus) {
    FormulaPtr f = parse_formula(text, reg);
    FormulaPtr again = parse_formula(render(*f, reg), reg);
    CHECK(structurally_equal(*f, *again));
  }

  roctest::Rng rng(7);
  for (int it = 0; it < 200; ++it) {
    FormulaPtr f = roctest::random_formula(rng, 6);
    FormulaPtr again = parse_formula(render(*f, reg), reg);
    CHECK(structurally_equal(*f, *again));
  }
}

TEST_CASE("eval examples") {
  VarRegistry reg;
  FormulaPtr f = parse_formula("x1 & x2", reg);
  CHECK(eval(*f, Assignment::from_mask(0b11, reg.size())));

  FormulaPtr g = parse_formula("x1 | x2", reg);
  CHECK_FALSE(eval(*g, Assignment(reg.size())));

  VarRegistry reg2;
  FormulaPtr h = parse_formula("(x1 | x2) & (y1 | y2)", reg2);
  Assignment a(reg2.size());
  a.set(*reg2.find("x1"), true);
  a.set(*reg2.find("y2"), true);
  CHECK(eval(*h, a));
}

TEST_CASE("evaluation is monotone on random samples") {
  roctest::Rng rng(11);
  const int n = 8;
  for (int it = 0; it < 10000; ++it) {
    FormulaPtr f = roctest::random_formula(rng, n);
    std::uint64_t mask = rng() & 0xff;
    int v = roctest::rand_int(rng, 0, n - 1);
    mask &= ~(std::uint64_t{1} << v);
    bool low = eval(*f, Assignment::from_mask(mask, n));
    bool high =
        eval(*f, Assignment::from_mask(mask | (std::uint64_t{1} << v), n));
    CHECK(low <= high);
  }
}

TEST_CASE("restrict examples") {
  VarRegistry reg;
  int x1 = reg.intern("x1");
  int w1 = reg.intern("w1");

  FormulaPtr andf = parse_formula("x1 & w1", reg);
  RestrictResult r1 = restrict_formula(*andf, {{x1, true}});
  REQUIRE_FALSE(r1.is_constant());
  CHECK(r1.formula->kind() == NodeKind::Var);
  CHECK(r1.formula->var_id() == w1);

  FormulaPtr orf = parse_formula("x1 | w1", reg);
  RestrictResult r2 = restrict_formula(*orf, {{x1, true}});
  REQUIRE(r2.is_constant());
  CHECK(*r2.constant == true);

  RestrictResult r3 = restrict_formula(*andf, {{x1, false}});
  REQUIRE(r3.is_constant());
  CHECK(*r3.constant == false);
}

TEST_CASE("restrict agrees with substitution on every completion") {
  roctest::Rng rng(23);
  const int n = 8;
  for (int it = 0; it < 300; ++it) {
    FormulaPtr f = roctest::random_formula(rng, n);
    std::map<int, bool> fixed;
    for (int v = 0; v < n; ++v)
      if (roctest::rand_int(rng, 0, 2) == 0)
        fixed[v] = roctest::rand_int(rng, 0, 1) == 1;
    RestrictResult r = restrict_formula(*f, fixed);
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
      bool skip = false;
      for (const auto& [v, b] : fixed)
        if (((mask >> v) & 1) != static_cast<std::uint64_t>(b)) skip = true;
      if (skip) continue;
      Assignment a = Assignment::from_mask(mask, n);
      bool expected = eval(*f, a);
      bool got = r.is_constant() ? *r.constant : eval(*r.formula, a);
      CHECK(expected == got);
    }
  }
}

TEST_CASE("restricted formula only mentions free variables") {
  VarRegistry reg;
  FormulaPtr f = parse_formula("(x1 | y1) & (x2 | y2)", reg);
  RestrictResult r =
      restrict_formula(*f, {{*reg.find("x1"), true}, {*reg.find("y2"), false}});
  REQUIRE_FALSE(r.is_constant());
  VarSet sup = support(*r.formula);
  CHECK_FALSE(sup.contains(*reg.find("x1")));
  CHECK_FALSE(sup.contains(*reg.find("y2")));
}

TEST_CASE("max_occurrences") {
  VarRegistry reg;
  CHECK(max_occurrences(*parse_formula("x1 & x2", reg)) == 1);
  CHECK(max_occurrences(*parse_formula("(x1|x2)&(x1|x3)", reg)) == 2);
}

TEST_CASE("varset algebra matches a reference set implementation") {
  roctest::Rng rng(5);
  for (int it = 0; it < 500; ++it) {
    std::uint64_t am = rng() & 0xfff, bm = rng() & 0xfff;
    VarSet a = VarSet::from_mask(am), b = VarSet::from_mask(bm);
    CHECK(a.set_union(b).to_mask() == (am | bm));
    CHECK(a.set_intersection(b).to_mask() == (am & bm));
    CHECK(a.set_difference(b).to_mask() == (am & ~bm));
    CHECK(a.subset_of(b) == ((am & ~bm) == 0));
    CHECK(a.intersects(b) == ((am & bm) != 0));
    CHECK(a.intersection_size(b) ==
          static_cast<std::size_t>(__builtin_popcountll(am & bm)));
  }
}

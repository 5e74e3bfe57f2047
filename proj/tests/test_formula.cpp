#include "doctest.h"
#include "oracles.hpp"
#include "rlx/corpus.hpp"
#include "rlx/dlattice.hpp"
#include "rlx/enumerate.hpp"
#include "rlx/formula.hpp"

using namespace rlx;

TEST_CASE("printing and reparsing gives the same formula") {
  for (const char* text : {"v | !v = 1", "v^2 = v", "v = !!v", "exists w . v | w = 1 && v & w = 0",
                           "exists w1 w2 . x * w1 = w2 && (x -> w2) <-> 1 = w1", "0 = 1", "x^31 = 0"}) {
    const Formula f = parse_formula(text);
    CHECK(parse_formula(print_formula(f)) == f);
  }
}

TEST_CASE("precedence and associativity") {
  const auto a = oracle::fixture("luk4");
  // -> is right associative and binds looser than |
  const Formula f = parse_formula("x -> x -> 0 = 1");
  const Formula g = parse_formula("x -> (x -> 0) = 1");
  CHECK(definable_set(a, f) == definable_set(a, g));
  const Formula h = parse_formula("!x * x = 0");
  CHECK(definable_set(a, h) == a.carrier());
}

TEST_CASE("malformed formulas are rejected with positions") {
  try {
    parse_formula("v + 1 = 1");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_formula("v = "), SyntaxError);
  CHECK_THROWS_AS(parse_formula("v^32 = 0"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("v = 2"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("v | w = 1"), UnboundVariable);
  CHECK_THROWS_AS(parse_formula("x = y"), MultipleFreeVariables);
  CHECK_THROWS_AS(parse_formula("exists w w . v = w"), SyntaxError);
}

TEST_CASE("built-in formulas define the element classes") {
  for (const auto& a : corpus_up_to(6)) {
    CHECK(definable_set(a, blp_formula()) == oracle::complemented(a));
    CHECK(definable_set(a, ilp_formula()) == oracle::idempotents(a));
    CHECK(definable_set(a, rlp_formula()) == oracle::regulars(a));
    CHECK(definable_set(a, lattice_boolean_formula()) == oracle::complemented(a));
  }
  for (const auto& l : enumerate_bdl(6)) CHECK(definable_set(l, lattice_boolean_formula()) == boolean_center(l));
}

TEST_CASE("formula shape") {
  CHECK(ilp_formula().is_atomic());
  CHECK_FALSE(lattice_boolean_formula().is_atomic());
  CHECK(blp_formula().uses_residuation());
  CHECK_FALSE(lattice_boolean_formula().uses_residuation());
  CHECK(parse_formula("0 = 1").free_var.empty());
}

TEST_CASE("residuation connectives are refused on lattices") {
  const auto l = enumerate_bdl(3)[0];
  CHECK_THROWS_AS(definable_set(l, rlp_formula()), InvalidArgument);
}

TEST_CASE("witnesses are reported") {
  const auto a = oracle::fixture("godel3");
  std::vector<Element> w;
  CHECK(satisfies(a, lattice_boolean_formula(), 0, &w));
  CHECK(w == std::vector<Element>{2});
  CHECK_FALSE(satisfies(a, lattice_boolean_formula(), 1));
}

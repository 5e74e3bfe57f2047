#include "doctest.h"
#include "oracles.hpp"
#include "rlx/constructors.hpp"
#include "rlx/corpus.hpp"
#include "rlx/lifting.hpp"

using namespace rlx;

namespace {

bool same(const LpReport& x, const LpReport& y) {
  if (x.global != y.global || x.per_filter.size() != y.per_filter.size()) return false;
  for (std::size_t i = 0; i < x.per_filter.size(); ++i) {
    const auto& p = x.per_filter[i];
    const auto& q = y.per_filter[i];
    if (!(p.filter == q.filter) || p.evidence.holds != q.evidence.holds ||
        p.evidence.counterexample != q.evidence.counterexample || p.evidence.witness != q.evidence.witness)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("the five-element Goedel fixture has ILP but not BLP") {
  const auto a = oracle::fixture("exlpdif");
  const LpReport blp = lp_report(a, blp_formula());
  CHECK_FALSE(blp.global);
  const Subset rad{*a.find("c"), a.top()};
  bool radical_fails = false;
  for (const auto& e : blp.per_filter) {
    CHECK(e.evidence.holds == oracle::boolean_lifting_by_classes(a, e.filter.members));
    if (e.filter.members == rad) {
      radical_fails = !e.evidence.holds;
      REQUIRE(e.evidence.counterexample);
      CHECK_FALSE(oracle::complemented(a).contains(*e.evidence.counterexample));
    }
  }
  CHECK(radical_fails);
  CHECK(has_ilp(a));
  CHECK(has_rlp(a));
}

TEST_CASE("the six-element fixture has ILP; BLP fails at [a)") {
  const auto a = oracle::fixture("nice");
  // A/[a) is the four-element Boolean algebra while B(A) = {0,1}, so the
  // class of b is complemented in the quotient but has no Boolean member.
  const Filter fa = principal_filter(a, *a.find("a"));
  CHECK_FALSE(oracle::boolean_lifting_by_classes(a, fa.members));
  const LpEvidence e = has_phi_lp(a, blp_formula(), fa);
  CHECK_FALSE(e.holds);
  REQUIRE(e.counterexample);
  CHECK(*e.counterexample == *a.find("b"));
  CHECK_FALSE(has_blp(a));
  CHECK(has_ilp(a));
  CHECK(has_rlp(a));
}

TEST_CASE("per-filter BLP agrees with the class-based oracle") {
  for (const auto& a : corpus_up_to(6))
    for (const auto& e : lp_report(a, blp_formula()).per_filter)
      CHECK(e.evidence.holds == oracle::boolean_lifting_by_classes(a, e.filter.members));
}

TEST_CASE("parallel and serial reports coincide") {
  for (const auto& a : corpus_up_to(5))
    for (const Formula* phi : {&blp_formula(), &ilp_formula(), &rlp_formula()})
      CHECK(same(lp_report(a, *phi), lp_report_serial(a, *phi)));
}

TEST_CASE("evidence is consistent with the definition") {
  for (const auto& a : corpus_up_to(5)) {
    const Subset boolean = oracle::complemented(a);
    for (const auto& e : lp_report(a, blp_formula()).per_filter) {
      const auto cls = oracle::quotient_classes(a, e.filter.members);
      if (e.evidence.holds) {
        CHECK_FALSE(e.evidence.counterexample);
        if (e.evidence.witness) {
          CHECK(boolean.contains(*e.evidence.witness));
        }
      } else {
        REQUIRE(e.evidence.counterexample);
        CHECK_FALSE(cls[*e.evidence.counterexample].intersects(boolean));
      }
    }
  }
}

TEST_CASE("RLP always holds") {
  for (const auto& a : corpus_up_to(6)) CHECK(has_rlp(a));
}

TEST_CASE("distance characterizations agree with direct lifting") {
  for (const auto& a : corpus_up_to(6)) {
    CHECK(blp_by_excluded_middle_filter(a) == has_blp(a));
    CHECK(ilp_by_square_distance(a) == has_ilp(a));
    CHECK(atomic_lp_characterization(a, blp_formula()) == has_blp(a));
    CHECK(atomic_lp_characterization(a, ilp_formula()) == has_ilp(a));
    CHECK(atomic_lp_characterization(a, rlp_formula()) == has_rlp(a));
  }
  CHECK_THROWS_AS(atomic_lp_characterization(boolean_algebra(1), lattice_boolean_formula()), NotAtomic);
}

TEST_CASE("the four descriptions of BLP coincide") {
  for (const auto& a : corpus_up_to(6)) {
    const auto c = propblp_conditions(a);
    CHECK(c.lifting == has_blp(a));
    CHECK(c.principal_split == c.lifting);
    CHECK(c.zero_product == c.lifting);
    CHECK(c.tuple_split == c.lifting);
    if (!c.lifting) CHECK(c.principal_split_witness);
  }
}

TEST_CASE("lifting in products") {
  const auto small = corpus_up_to(3);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const Formula* phi : {&blp_formula(), &ilp_formula(), &rlp_formula()})
        CHECK(product_lp_check(a, b, *phi).consistent());
  const auto e1 = oracle::fixture("exlpdif");
  const auto c = product_lp_check(e1, boolean_algebra(1), blp_formula());
  CHECK_FALSE(c.product);
  CHECK_FALSE(c.left);
  CHECK(c.right);
}

TEST_CASE("lifting for a user formula") {
  const Formula phi = parse_formula("v^2 = 0");
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto l = lukasiewicz_chain(n);
    const LpReport r = lp_report(l, phi);
    // oracle: a class whose square is the zero class must contain an
    // element whose square is 0
    bool expected = true;
    for (const auto& e : r.per_filter) {
      const auto cls = oracle::quotient_classes(l, e.filter.members);
      bool filter_ok = true;
      for (Element x = 0; x < l.size(); ++x) {
        const bool zero_in_quotient = cls[l.odot(x, x)] == cls[l.bot()];
        bool lifts = false;
        for (Element y : cls[x]) lifts |= l.odot(y, y) == l.bot();
        if (zero_in_quotient && !lifts) filter_ok = false;
      }
      CHECK(e.evidence.holds == filter_ok);
      expected &= filter_ok;
    }
    CHECK(r.global == expected);
  }
}

#include "doctest.h"
#include "oracles.hpp"
#include "rlx/constructors.hpp"
#include "rlx/corpus.hpp"
#include "rlx/filters.hpp"
#include "rlx/text_format.hpp"

using namespace rlx;

namespace {

Element id(const ResiduatedLattice& a, const char* label) { return *a.find(label); }

}  // namespace

TEST_CASE("validate accepts the five-element Goedel fixture") {
  const auto a = oracle::fixture("exlpdif");
  CHECK(a.size() == 5);
  CHECK(a.odot_table() == a.meet_table());
  CHECK(a.imp(id(a, "a"), a.bot()) == id(a, "b"));
}

TEST_CASE("a wrong implication entry is reported as a residuation violation") {
  RawAlgebra raw = parse_rlat_raw(read_file(oracle::kFixtures + "/exlpdif.rlat"));
  const std::size_t n = raw.size();
  (*raw.imp)[1 * n + 0] = 1;  // a -> 0 becomes a instead of b
  // oracle: some triple breaks a*b <= c iff a <= b->c
  bool violated = false;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        violated |= (raw.leq[raw.odot[x * n + y] * n + z] != 0) != (raw.leq[x * n + (*raw.imp)[y * n + z]] != 0);
  REQUIRE(violated);
  try {
    validate(raw);
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == "residuation");
    CHECK(e.witness().size() == 3);
  }
}

TEST_CASE("structural errors name the axiom") {
  RawAlgebra raw = parse_rlat_raw(read_file(oracle::kFixtures + "/b2.rlat"));
  raw.odot[0 * 2 + 1] = 1;
  CHECK_THROWS_AS(validate(raw), AxiomViolation);
  RawAlgebra bad = parse_rlat_raw(read_file(oracle::kFixtures + "/b2.rlat"));
  bad.odot.pop_back();
  CHECK_THROWS_AS(validate(bad), InvalidArgument);
}

TEST_CASE("derived implication on B2 is the Boolean one") {
  const auto b = boolean_algebra(1);
  for (Element x = 0; x < 2; ++x)
    for (Element y = 0; y < 2; ++y) CHECK(b.imp(x, y) == (x == 0 || y == 1 ? 1U : 0U));
}

TEST_CASE("derived implication of the six-element fixture equals its printed table") {
  RawAlgebra raw = parse_rlat_raw(read_file(oracle::kFixtures + "/nice.rlat"));
  const Table given = *raw.imp;
  raw.imp.reset();
  CHECK(derive_implication(raw) == given);
}

TEST_CASE("derived implication of the lozenge with meet is the Heyting one") {
  RawAlgebra raw;
  raw.labels = {"0", "a", "b", "1"};
  raw.leq = order_closure(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  raw.odot = {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3};
  raw.bot = 0;
  raw.top = 3;
  const Table imp = derive_implication(raw);
  // oracle: the largest x with x & b <= c
  for (Element b = 0; b < 4; ++b)
    for (Element c = 0; c < 4; ++c) {
      Element best = 0;
      for (Element x = 0; x < 4; ++x)
        if (raw.leq[raw.odot[x * 4 + b] * 4 + c] && raw.leq[best * 4 + x]) best = x;
      CHECK(imp[b * 4 + c] == best);
    }
}

TEST_CASE("a product without residuum is rejected") {
  RawAlgebra raw;
  raw.labels = {"0", "a", "b", "1"};
  raw.leq = order_closure(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  // a * b = a although a <= 1 and 1 * b = b: not monotone, so no residuum
  raw.odot = {0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 2, 2, 0, 1, 2, 3};
  raw.bot = 0;
  raw.top = 3;
  CHECK_THROWS(validate(raw));
}

TEST_CASE("element classes of the fixtures") {
  const auto e1 = oracle::fixture("exlpdif");
  const auto c1 = classify(e1);
  CHECK(c1.idempotents == e1.carrier());
  CHECK(c1.is_godel);
  CHECK_FALSE(c1.is_hyperarchimedean);

  const auto e2 = oracle::fixture("nice");
  const auto c2 = classify(e2);
  CHECK(c2.boolean_center == Subset{e2.bot(), e2.top()});
  CHECK(c2.idempotents == e2.carrier() - Subset::single(id(e2, "c")));
  CHECK(c2.regulars == oracle::regulars(e2));

  const auto l4 = oracle::fixture("luk4");
  const auto c4 = classify(l4);
  CHECK(c4.is_involutive);
  CHECK(c4.is_chain);
  CHECK(c4.is_hyperarchimedean);
  CHECK(c4.boolean_center == c4.idempotents);
}

TEST_CASE("element classes agree with direct scans on the corpus") {
  for (const auto& a : corpus_up_to(6)) {
    const auto c = classify(a);
    CHECK(c.boolean_center == oracle::complemented(a));
    CHECK(c.idempotents == oracle::idempotents(a));
    CHECK(c.regulars == oracle::regulars(a));
    CHECK(Subset{a.bot(), a.top()}.subset_of(c.boolean_center));
    CHECK(c.boolean_center.subset_of(c.idempotents & c.regulars));
    CHECK(c.is_godel == (c.idempotents == a.carrier()));
    CHECK(c.is_godel == (a.odot_table() == a.meet_table()));
    CHECK(c.is_involutive == (c.regulars == a.carrier()));
    CHECK(c.is_hyperarchimedean == (c.archimedeans == a.carrier()));
    for (Element x : c.nilpotents) CHECK(a.power(x, a.size()) == a.bot());
  }
}

TEST_CASE("basic identities hold on the corpus") {
  for (const auto& a : corpus_up_to(6)) {
    const auto boolean = classify(a).boolean_center;
    for (Element x = 0; x < a.size(); ++x) {
      CHECK(a.odot(x, a.neg(x)) == a.bot());
      CHECK(a.leq(x, a.neg(a.neg(x))));
      CHECK(a.neg(a.neg(a.neg(x))) == a.neg(x));
      for (Element y = 0; y < a.size(); ++y) {
        CHECK(a.leq(a.odot(x, y), a.meet(x, y)));
        if (a.join(x, y) == a.top()) CHECK(a.meet(x, y) == a.odot(x, y));
        for (Element z = 0; z < a.size(); ++z)
          CHECK(a.odot(x, a.join(y, z)) == a.join(a.odot(x, y), a.odot(x, z)));
      }
    }
    for (Element e : boolean) {
      CHECK(boolean.contains(a.neg(e)));
      for (Element f : boolean) {
        CHECK(a.odot(e, f) == a.meet(e, f));
        CHECK(boolean.contains(a.join(e, f)));
        CHECK(boolean.contains(a.meet(e, f)));
      }
      for (Element x = 0; x < a.size(); ++x) CHECK(a.imp(e, x) == a.join(a.neg(e), x));
    }
  }
}

TEST_CASE("constructors") {
  CHECK(boolean_algebra(0).size() == 1);
  CHECK(boolean_algebra(3).size() == 8);
  CHECK(classify(boolean_algebra(3)).boolean_center == Subset::full(8));
  CHECK(classify(godel_chain(4)).is_godel);
  const auto l5 = lukasiewicz_chain(5);
  CHECK(classify(l5).is_involutive);
  CHECK(l5.odot(1, 3) == 0);
  CHECK(l5.odot(2, 3) == 1);

  const auto p = direct_product(godel_chain(3), boolean_algebra(1));
  CHECK(p.size() == 6);
  CHECK(p.odot(1 * 2 + 1, 2 * 2 + 0) == 1 * 2 + 0);

  // Ordinal sum of B2 below the three-element chain: a four-element chain.
  const auto s = ordinal_sum(boolean_algebra(1), godel_chain(3));
  CHECK(s.size() == 4);
  CHECK(classify(s).is_chain);
}

TEST_CASE("the algebra above a Boolean element validates on the corpus") {
  for (const auto& a : corpus_up_to(6))
    for (Element e : classify(a).boolean_center) {
      const auto u = upset_algebra(a, e);
      CHECK(u.size() == a.up_set(e).count());
      CHECK(u.bot() == u.find(a.label(e)).value());
    }
}

TEST_CASE("powers and idempotent powers") {
  const auto l = lukasiewicz_chain(4);
  CHECK(l.power(3, 0) == 3);
  CHECK(l.power(2, 2) == 1);
  CHECK(l.power(2, 3) == 0);
  CHECK(l.idempotent_power(2) == 0);
  CHECK(l.idempotent_power(3) == 3);
  CHECK(is_nilpotent(l, 2));
  CHECK_FALSE(is_nilpotent(l, 3));
}

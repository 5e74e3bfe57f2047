#include "doctest.h"
#include "oracles.hpp"
#include "rlx/canonical.hpp"
#include "rlx/constructors.hpp"
#include "rlx/corpus.hpp"
#include "rlx/reticulation.hpp"
#include "rlx/spectra.hpp"

using namespace rlx;

TEST_CASE("a Goedel algebra is its own reticulation") {
  const auto a = oracle::fixture("exlpdif");
  const Reticulation r = build_reticulation(a);
  CHECK(isomorphic(r.lattice, underlying_lattice(a)));
  CHECK(verify_retic_properties(r).all());
  CHECK_FALSE(is_boolean_lattice(r.lattice));
}

TEST_CASE("finite MV chains have the two-element reticulation") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const Reticulation r = build_reticulation(lukasiewicz_chain(n));
    CHECK(r.lattice.size() == 2);
    CHECK(is_boolean_lattice(r.lattice));
    CHECK(archimedean_bridge(r).all());
  }
}

TEST_CASE("the trivial algebra") {
  const Reticulation r = build_reticulation(boolean_algebra(0));
  CHECK(r.lattice.size() == 1);
  CHECK(verify_retic_properties(r).all());
}

TEST_CASE("lambda identifies exactly the elements generating the same filter") {
  for (const auto& a : corpus_up_to(6)) {
    const Reticulation r = build_reticulation(a);
    const Reticulation s = build_reticulation_by_powers(a);
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y) {
        const bool same_filter = oracle::generated_filter_by_fixpoint(a, Subset::single(x)) ==
                                 oracle::generated_filter_by_fixpoint(a, Subset::single(y));
        CHECK((r.lambda[x] == r.lambda[y]) == same_filter);
        CHECK((s.lambda[x] == s.lambda[y]) == same_filter);
        // lambda(x) <= lambda(y) iff y is in the filter generated by x
        const Subset fx = oracle::generated_filter_by_fixpoint(a, Subset::single(x));
        CHECK(r.lattice.leq(r.lambda[x], r.lambda[y]) == fx.contains(y));
        CHECK(s.lattice.leq(s.lambda[x], s.lambda[y]) == fx.contains(y));
      }
    const auto iso = uniqueness_check(r, s);
    for (Element x = 0; x < a.size(); ++x) CHECK(iso[r.lambda[x]] == s.lambda[x]);
  }
}

TEST_CASE("axioms and properties on the corpus") {
  for (const auto& a : corpus_up_to(6)) {
    const ReticVerdict v = verify_retic_properties(build_reticulation(a));
    CHECK(v.all());
  }
}

TEST_CASE("BLP transfer and the archimedean bridge") {
  for (const auto& a : corpus_up_to(6)) {
    const Reticulation r = build_reticulation(a);
    for (const Filter& f : all_filters(a)) {
      const BlpTransfer t = blp_transfer(r, f);
      CHECK(t.in_algebra == t.in_lattice);
      CHECK(t.in_algebra == oracle::boolean_lifting_by_classes(a, f.members));
    }
    const ArchimedeanBridge b = archimedean_bridge(r);
    CHECK(b.all());
    CHECK(classify(a).is_hyperarchimedean == is_boolean_lattice(r.lattice));
  }
}

TEST_CASE("Gelfand iff the reticulation is conormal") {
  for (const auto& a : corpus_up_to(6))
    CHECK(is_gelfand(a) == is_conormal_lattice(build_reticulation(a).lattice));
}

TEST_CASE("morphisms and functoriality") {
  const auto small = corpus_up_to(4);
  for (const auto& b : small)
    for (const auto& c : small) {
      const auto fs = enumerate_morphisms(b, c);
      for (const auto& f : fs) {
        CHECK(is_morphism(b, c, f.map));
        // L(f) respects lambda
        const auto lf = reticulate_morphism(f);
        const Reticulation rb = build_reticulation(b), rc = build_reticulation(c);
        for (Element x = 0; x < b.size(); ++x) CHECK(lf[rb.lambda[x]] == rc.lambda[f.map[x]]);
      }
    }
  for (const auto& a : small) {
    const auto id = reticulate_morphism(identity_morphism(a));
    for (Element x = 0; x < id.size(); ++x) CHECK(id[x] == x);
  }
  // L(g f) = L(g) L(f) on all composable pairs among algebras of size <= 3
  const auto tiny = corpus_up_to(3);
  for (const auto& a : tiny)
    for (const auto& b : tiny)
      for (const auto& c : tiny)
        for (const auto& f : enumerate_morphisms(a, b))
          for (const auto& g : enumerate_morphisms(b, c)) {
            const auto lgf = reticulate_morphism(compose(g, f));
            const auto lf = reticulate_morphism(f), lg = reticulate_morphism(g);
            for (Element x = 0; x < lgf.size(); ++x) CHECK(lgf[x] == lg[lf[x]]);
          }
  CHECK_THROWS_AS(make_morphism(boolean_algebra(1), godel_chain(3), {0, 1}), InvalidArgument);
}

#include "doctest.h"
#include "oracles.hpp"
#include "rlx/constructors.hpp"
#include "rlx/corpus.hpp"
#include "rlx/filters.hpp"
#include "rlx/spectra.hpp"

using namespace rlx;

namespace {

bool gelfand_oracle(const ResiduatedLattice& a) {
  const auto maxima = oracle::maxima_by_scan(a);
  for (Subset p : oracle::primes_by_scan(a)) {
    std::size_t above = 0;
    for (Subset m : maxima) above += p.subset_of(m);
    if (above != 1) return false;
  }
  return true;
}

Subset radical_oracle(const ResiduatedLattice& a) {
  Subset r = a.carrier();
  for (Subset m : oracle::maxima_by_scan(a)) r &= m;
  return r;
}

bool nilpotent_oracle(const ResiduatedLattice& a, Element x) {
  Element p = a.top();
  for (std::size_t i = 0; i <= a.size(); ++i) p = a.odot(p, x);
  return p == a.bot();
}

// Every [x) equals [u * e) with e complemented and u satisfying `good`.
template <class Good>
bool split_oracle(const ResiduatedLattice& a, Good good) {
  const Subset boolean = oracle::complemented(a);
  for (Element x = 0; x < a.size(); ++x) {
    const Subset fx = oracle::generated_filter_by_fixpoint(a, Subset::single(x));
    bool found = false;
    for (Element u = 0; u < a.size() && !found; ++u) {
      if (!good(u)) continue;
      for (Element e : boolean)
        if (oracle::generated_filter_by_fixpoint(a, Subset{u, e}) == fx) found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Spec of the five-element Goedel fixture") {
  const auto a = oracle::fixture("exlpdif");
  const SpectrumSpace s = stone_spec(a);
  REQUIRE(s.points.size() == 3);
  CHECK(s.points[0] == Subset::single(a.top()));
  // {1} lies in every open set but the empty one
  CHECK(s.space.opens() == std::vector<Subset>{Subset{}, Subset{0}, Subset{0, 1}, Subset{0, 2}, Subset{0, 1, 2}});
  CHECK(s.space.closure(Subset{0}) == Subset{0, 1, 2});
  const SpectrumSpace m = stone_max(a);
  CHECK(m.points.size() == 2);
  CHECK(is_hausdorff(m.space));
  CHECK_FALSE(is_gelfand(a));
  CHECK_THROWS_AS(gelfand_retract(a), NotGelfand);
}

TEST_CASE("the six-element fixture is not Gelfand") {
  const auto a = oracle::fixture("nice");
  CHECK(gelfand_oracle(a) == false);
  CHECK_FALSE(is_gelfand(a));
  CHECK(stone_spec(a).points[0] == Subset::single(a.top()));
}

TEST_CASE("supports of filters and elements match their definitions") {
  for (const auto& a : corpus_up_to(6)) {
    const SpectrumSpace s = stone_spec(a);
    const auto filters = all_filters(a);
    for (const Filter& f : filters) {
      Subset expected;
      for (Element p = 0; p < s.points.size(); ++p)
        if (!f.members.subset_of(s.points[p])) expected.insert(p);
      CHECK(open_of(s, f.members) == expected);
      CHECK(closed_of(s, f.members) == expected.complement_in(s.points.size()));
      CHECK(s.space.is_open(expected));
    }
    for (Element x = 0; x < a.size(); ++x)
      CHECK(open_of(s, Subset::single(x)) == open_of(s, principal_filter(a, x).members));
    CHECK(s.space.is_open(Subset{}));
  }
}

TEST_CASE("Boolean supports are the clopens") {
  for (const auto& a : corpus_up_to(6)) {
    CHECK(clopen_via_boolean(a, SpectrumKind::Prime) == clopen_sets(stone_spec(a)));
    if (is_gelfand(a) || is_semisimple(a))
      CHECK(clopen_via_boolean(a, SpectrumKind::Maximal) == clopen_sets(stone_max(a)));
  }
}

TEST_CASE("the Gelfand property against the scan, and its fifteen forms") {
  for (const auto& a : corpus_up_to(6)) {
    const bool g = is_gelfand(a);
    CHECK(g == gelfand_oracle(a));
    const auto c = gelfand_conditions(a);
    CHECK(c.all_agree());
    CHECK(c.holds[3] == g);
    if (g) {
      const auto r = gelfand_retract(a);
      const SpectrumSpace s = stone_spec(a), m = stone_max(a);
      CHECK(is_continuous(r, s.space, m.space));
      for (std::size_t i = 0; i < m.points.size(); ++i) CHECK(r[*s.index_of(m.points[i])] == i);
      for (std::size_t p = 0; p < s.points.size(); ++p) CHECK(s.points[p].subset_of(m.points[r[p]]));
    }
  }
}

TEST_CASE("continuous retracts follow the specialization order") {
  // Sierpinski space: the closed point 1 is the only maximal point.
  const auto sierpinski = FiniteSpace::generated_by(2, {Subset{0}});
  std::optional<std::vector<Element>> r;
  CHECK(has_continuous_retract(sierpinski, {1}, &r));
  CHECK(*r == std::vector<Element>{0, 0});
  // A point in the closure of two maximal points cannot be sent anywhere.
  const auto v = FiniteSpace::generated_by(3, {Subset{0}, Subset{0, 1}, Subset{0, 2}});
  CHECK_FALSE(has_continuous_retract(v, {1, 2}));
}

TEST_CASE("(*) and (**) against direct searches") {
  for (const auto& a : corpus_up_to(5)) {
    const Subset rad = radical_oracle(a);
    const StarReport star = star_property(a);
    CHECK(star.all_agree());
    CHECK(star.holds == split_oracle(a, [&](Element u) { return rad.contains(u); }));
    const bool star_star = star_star_property(a).holds;
    CHECK(star_star == split_oracle(a, [&](Element u) { return nilpotent_oracle(a, a.neg(u)); }));
  }
}

TEST_CASE("(*) on fixtures") {
  CHECK_FALSE(star_property(oracle::fixture("exlpdif")).holds);
  CHECK(star_property(boolean_algebra(2)).holds);
  CHECK(star_star_property(boolean_algebra(2)).holds);
  CHECK(star_property(oracle::fixture("luk4")).holds);
}

#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "rlx/canonical.hpp"
#include "rlx/constructors.hpp"
#include "rlx/corpus.hpp"
#include "rlx/filters.hpp"

using namespace rlx;

namespace {

std::vector<Subset> members(const std::vector<Filter>& fs) {
  std::vector<Subset> out;
  for (const Filter& f : fs) out.push_back(f.members);
  return out;
}

std::vector<Subset> sorted(std::vector<Subset> v) {
  std::sort(v.begin(), v.end(), [](Subset x, Subset y) {
    return x.count() != y.count() ? x.count() < y.count() : x.bits() < y.bits();
  });
  return v;
}

Subset labels(const ResiduatedLattice& a, std::initializer_list<const char*> names) {
  Subset s;
  for (const char* n : names) s.insert(*a.find(n));
  return s;
}

}  // namespace

TEST_CASE("filters agree with a subset scan on the corpus") {
  for (const auto& a : corpus_up_to(6)) {
    const auto fs = all_filters(a);
    CHECK(members(fs) == sorted(oracle::filters_by_subset_scan(a)));
    CHECK(std::is_sorted(fs.begin(), fs.end(), filter_less));
    CHECK(members(spec(a)) == sorted(oracle::primes_by_scan(a)));
    CHECK(members(max_spec(a)) == sorted(oracle::maxima_by_scan(a)));
    for (const Filter& f : fs) CHECK(is_filter(a, f.members));
  }
}

TEST_CASE("generated filters agree with the fixpoint closure") {
  for (const auto& a : corpus_up_to(5))
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << a.size()); ++m)
      CHECK(generated_filter(a, Subset(m)).members == oracle::generated_filter_by_fixpoint(a, Subset(m)));
}

TEST_CASE("principal filters and their least generators") {
  for (const auto& a : corpus_up_to(6)) {
    for (Element x = 0; x < a.size(); ++x) {
      const Filter f = principal_filter(a, x);
      CHECK(f.members == oracle::generated_filter_by_fixpoint(a, Subset::single(x)));
      CHECK(a.up_set(min_generator(a, f)) == f.members);
    }
  }
}

TEST_CASE("filter join and meet") {
  for (const auto& a : corpus_up_to(5)) {
    const auto fs = all_filters(a);
    for (const Filter& f : fs)
      for (const Filter& g : fs) {
        CHECK(filter_join(a, f, g).members == oracle::generated_filter_by_fixpoint(a, f.members | g.members));
        CHECK(filter_meet(f, g).members == (f.members & g.members));
      }
  }
}

TEST_CASE("radical, local, semisimple") {
  for (const auto& a : corpus_up_to(6)) {
    Subset meet = a.carrier();
    for (const Filter& m : max_spec(a)) meet &= m.members;
    CHECK(radical(a).members == meet);
    CHECK(is_local(a) == (max_spec(a).size() == 1));
    CHECK(is_semisimple(a) == (meet == Subset::single(a.top())));
    std::size_t count = 0;
    CHECK(is_semilocal(a, &count));
    CHECK(count == max_spec(a).size());
  }
  const auto t = boolean_algebra(0);
  CHECK(max_spec(t).empty());
  CHECK(radical(t).members == t.carrier());
  CHECK(is_local(godel_chain(4)));
  CHECK(is_semisimple(boolean_algebra(2)));
}

TEST_CASE("spectra of the five-element Goedel fixture") {
  const auto a = oracle::fixture("exlpdif");
  CHECK(radical(a).members == labels(a, {"c", "1"}));
  const auto mx = max_spec(a);
  REQUIRE(mx.size() == 2);
  CHECK(mx[0] == principal_filter(a, *a.find("a")));
  CHECK(mx[1] == principal_filter(a, *a.find("b")));
  CHECK(spec(a).size() == 3);
  CHECK(spec(a)[0].members == labels(a, {"1"}));
}

TEST_CASE("maximal filters and a Boolean quotient of the six-element fixture") {
  const auto a = oracle::fixture("nice");
  const auto mx = max_spec(a);
  REQUIRE(mx.size() == 2);
  const auto b = principal_filter(a, *a.find("b")), d = principal_filter(a, *a.find("d"));
  CHECK(std::find(mx.begin(), mx.end(), b) != mx.end());
  CHECK(std::find(mx.begin(), mx.end(), d) != mx.end());
  const Quotient q = quotient(a, principal_filter(a, *a.find("a")));
  CHECK(q.quotient.size() == 4);
  CHECK(isomorphic(q.quotient, boolean_algebra(2)));
  CHECK(q.class_of[*a.find("c")] == q.class_of[*a.find("d")]);
  CHECK(q.class_of[*a.find("a")] == q.class_of[a.top()]);
}

TEST_CASE("quotient classes agree with the biresiduum relation") {
  for (const auto& a : corpus_up_to(5))
    for (const Filter& f : all_filters(a)) {
      const Quotient q = quotient(a, f);
      const auto cls = oracle::quotient_classes(a, f.members);
      for (Element x = 0; x < a.size(); ++x) {
        CHECK(q.preimage(Subset::single(q.class_of[x])) == cls[x]);
        CHECK(q.section[q.class_of[x]] == cls[x].first());
        for (Element y = 0; y < a.size(); ++y) {
          CHECK(q.class_of[a.odot(x, y)] == q.quotient.odot(q.class_of[x], q.class_of[y]));
          CHECK(q.class_of[a.imp(x, y)] == q.quotient.imp(q.class_of[x], q.class_of[y]));
          CHECK(q.class_of[a.join(x, y)] == q.quotient.join(q.class_of[x], q.class_of[y]));
        }
      }
      CHECK(q.image(f.members) == Subset::single(q.quotient.top()));
    }
}

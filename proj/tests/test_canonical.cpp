#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "rlx/canonical.hpp"
#include "rlx/constructors.hpp"
#include "rlx/corpus.hpp"
#include "rlx/enumerate.hpp"

using namespace rlx;

TEST_CASE("canonical form is invariant under every relabelling") {
  for (const char* name : {"exlpdif", "nice", "luk4"}) {
    const auto a = oracle::fixture(name);
    const auto code = canonical_form(a).code;
    std::vector<Element> p(a.size());
    std::iota(p.begin(), p.end(), 0);
    std::size_t tried = 0;
    do {
      CHECK(canonical_form(permute(a, p)).code == code);
      ++tried;
    } while (std::next_permutation(p.begin(), p.end()) && tried < 720);
  }
}

TEST_CASE("canonicalization is idempotent and keeps bounds in place") {
  for (const auto& a : corpus_up_to(5)) {
    const auto c = canonicalize(a);
    CHECK(canonicalize(c) == c);
    CHECK(c.bot() == 0);
    CHECK(c.top() == c.size() - 1);
    CHECK(canonical_hash(c) == canonical_hash(a));
  }
}

TEST_CASE("equal codes coincide with brute-force isomorphism") {
  std::vector<ResiduatedLattice> sample = corpus_up_to(4);
  sample.push_back(permute(oracle::fixture("luk4"), {0, 2, 1, 3}));
  sample.push_back(oracle::fixture("godel3"));
  for (const auto& a : sample)
    for (const auto& b : sample) {
      const bool same = canonical_form(a).code == canonical_form(b).code;
      CHECK(same == oracle::isomorphic_by_permutations(a, b));
      CHECK(same == isomorphic(a, b));
      if (same) {
        const auto iso = find_isomorphism(a, b);
        REQUIRE(iso);
        for (Element x = 0; x < a.size(); ++x)
          for (Element y = 0; y < a.size(); ++y) CHECK((*iso)[a.odot(x, y)] == b.odot((*iso)[x], (*iso)[y]));
      }
    }
}

TEST_CASE("canonical lattice forms separate the five-element lattices") {
  const auto lattices = enumerate_bdl(5);
  CHECK(lattices.size() == 3);
  for (std::size_t i = 0; i < lattices.size(); ++i)
    for (std::size_t j = 0; j < lattices.size(); ++j) CHECK(isomorphic(lattices[i], lattices[j]) == (i == j));
}

#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rlx/constructors.hpp"
#include "rlx/corpus.hpp"
#include "rlx/lifting.hpp"
#include "rlx/spectra.hpp"
#include "rlx/theorems.hpp"

using namespace rlx;

namespace {

const TheoremRow& row(const TheoremReport& t, const std::string& id) {
  for (const TheoremRow& r : t.rows)
    if (r.theorem_id == id) return r;
  FAIL("missing row " << id);
  return t.rows.front();
}

}  // namespace

TEST_CASE("every row agrees on the fixtures") {
  for (const char* name : {"exlpdif", "nice", "b2", "godel3", "luk4", "trivial"}) {
    const TheoremReport t = theorem_checks(oracle::fixture(name));
    for (const TheoremRow& r : t.rows) CHECK_MESSAGE(r.agree, name << ": " << r.theorem_id << " " << r.witness);
    CHECK(t.disagreements() == 0);
  }
}

TEST_CASE("the five-element Goedel fixture: BLP and strong zero-dimensionality both fail") {
  const TheoremReport t = theorem_checks(oracle::fixture("exlpdif"));
  const TheoremRow& r = row(t, "blp-iff-spec-strongly-zero-dimensional");
  CHECK_FALSE(r.lhs);
  CHECK_FALSE(r.rhs);
  CHECK(r.agree);
  CHECK_FALSE(row(t, "blp-iff-gelfand-and-max-boolean").lhs);
}

TEST_CASE("row ids are unique and the order is fixed") {
  const TheoremReport t = theorem_checks(oracle::fixture("b2"));
  std::set<std::string> ids;
  for (const TheoremRow& r : t.rows) CHECK(ids.insert(r.theorem_id).second);
  CHECK(t.rows.size() > 60);
  const TheoremReport u = theorem_checks(oracle::fixture("luk4"));
  REQUIRE(u.rows.size() == t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) CHECK(u.rows[i].theorem_id == t.rows[i].theorem_id);
  CHECK_FALSE(t.notes.empty());
}

TEST_CASE("parallel and serial theorem checks coincide") {
  for (const auto& a : corpus_up_to(5)) {
    const TheoremReport p = theorem_checks(a), s = theorem_checks_serial(a);
    REQUIRE(p.rows.size() == s.rows.size());
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
      CHECK(p.rows[i].theorem_id == s.rows[i].theorem_id);
      CHECK(p.rows[i].lhs == s.rows[i].lhs);
      CHECK(p.rows[i].rhs == s.rows[i].rhs);
      CHECK(p.rows[i].witness == s.rows[i].witness);
    }
  }
}

TEST_CASE("conditional rows whose hypothesis fails agree") {
  const TheoremReport t = theorem_checks(oracle::fixture("exlpdif"));
  const TheoremRow& r = row(t, "semisimple-blp-iff-star");
  CHECK(r.agree);
  CHECK(r.witness == "hypothesis not met");
}

TEST_CASE("products of local algebras") {
  CHECK(is_product_of_locals(boolean_algebra(0)));
  CHECK(is_product_of_locals(boolean_algebra(3)));
  CHECK(is_product_of_locals(godel_chain(4)));
  CHECK(is_product_of_locals(direct_product(godel_chain(3), lukasiewicz_chain(4))));
  CHECK_FALSE(is_product_of_locals(oracle::fixture("exlpdif")));
  CHECK_FALSE(is_product_of_locals(oracle::fixture("nice")));
}

TEST_CASE("on finite algebras Gelfand, BLP and being a product of locals coincide") {
  for (const auto& a : corpus_up_to(7)) {
    const bool g = is_gelfand(a);
    CHECK(g == has_blp(a));
    CHECK(g == is_product_of_locals(a));
  }
}

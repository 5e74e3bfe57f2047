#include "doctest.h"
#include "rlx/corpus.hpp"
#include "rlx/spectra.hpp"
#include "rlx/topology.hpp"

using namespace rlx;

namespace {

// Definitions checked by brute force over the open family.
bool hausdorff_oracle(const FiniteSpace& x) {
  for (Element p = 0; p < x.size(); ++p)
    for (Element q = p + 1; q < x.size(); ++q) {
      bool separated = false;
      for (Subset u : x.opens())
        for (Subset v : x.opens())
          if (u.contains(p) && v.contains(q) && !u.intersects(v)) separated = true;
      if (!separated) return false;
    }
  return true;
}

bool t0_oracle(const FiniteSpace& x) {
  for (Element p = 0; p < x.size(); ++p)
    for (Element q = p + 1; q < x.size(); ++q) {
      bool told = false;
      for (Subset u : x.opens()) told |= u.contains(p) != u.contains(q);
      if (!told) return false;
    }
  return true;
}

bool normal_oracle(const FiniteSpace& x) {
  const auto closed = x.closed_sets();
  for (Subset c : closed)
    for (Subset d : closed) {
      if (c.intersects(d)) continue;
      bool ok = false;
      for (Subset u : x.opens())
        for (Subset v : x.opens())
          if (c.subset_of(u) && d.subset_of(v) && !u.intersects(v)) ok = true;
      if (!ok) return false;
    }
  return true;
}

bool zero_dim_oracle(const FiniteSpace& x) {
  const auto cl = x.clopens();
  for (Subset u : x.opens()) {
    Subset cover;
    for (Subset c : cl)
      if (c.subset_of(u)) cover |= c;
    if (cover != u) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("generated topologies") {
  const auto s = FiniteSpace::generated_by(3, {Subset{0}, Subset{1}});
  CHECK(s.opens() == std::vector<Subset>{Subset{}, Subset{0}, Subset{1}, Subset{0, 1}, Subset{0, 1, 2}});
  CHECK(s.closure(Subset{0}) == Subset{0, 2});
  CHECK(s.interior(Subset{0, 2}) == Subset{0});
  CHECK(s.is_closed(Subset{2}));
  CHECK(s.clopens() == std::vector<Subset>{Subset{}, Subset{0, 1, 2}});
  const auto sub = s.subspace(Subset{0, 2});
  CHECK(sub.opens() == std::vector<Subset>{Subset{}, Subset{0}, Subset{0, 1}});
}

TEST_CASE("predicates on small spaces") {
  const auto discrete = FiniteSpace::generated_by(3, {Subset{0}, Subset{1}, Subset{2}});
  const auto p = topology_predicates(discrete);
  CHECK((p.t0 && p.t1 && p.hausdorff && p.compact && p.zero_dim && p.strongly_zero_dim && p.normal &&
         p.boolean_space));

  const auto sierpinski = FiniteSpace::generated_by(2, {Subset{0}});
  const auto q = topology_predicates(sierpinski);
  CHECK(q.t0);
  CHECK_FALSE(q.t1);
  CHECK_FALSE(q.hausdorff);
  CHECK_FALSE(q.zero_dim);
  CHECK(q.normal);

  const auto indiscrete = FiniteSpace::generated_by(2, {});
  const auto r = topology_predicates(indiscrete);
  CHECK_FALSE(r.t0);
  CHECK(r.zero_dim);
  CHECK(r.strongly_zero_dim);
}

TEST_CASE("predicates agree with brute-force definitions on corpus spectra") {
  for (const auto& a : corpus_up_to(6))
    for (const SpectrumSpace& s : {stone_spec(a), stone_max(a)}) {
      const FiniteSpace& x = s.space;
      CHECK(is_hausdorff(x) == hausdorff_oracle(x));
      CHECK(is_t0(x) == t0_oracle(x));
      CHECK(is_normal_space(x) == normal_oracle(x));
      CHECK(is_zero_dimensional(x) == zero_dim_oracle(x));
      CHECK(is_t0(x));
      CHECK(is_basis(x, s.basis));
    }
}

TEST_CASE("continuity and homeomorphisms") {
  const auto sierpinski = FiniteSpace::generated_by(2, {Subset{0}});
  const auto discrete = FiniteSpace::generated_by(2, {Subset{0}, Subset{1}});
  CHECK(is_continuous({0, 1}, discrete, sierpinski));
  CHECK_FALSE(is_continuous({0, 1}, sierpinski, discrete));
  CHECK(is_continuous({0, 0}, sierpinski, discrete));
  CHECK(is_homeomorphism({1, 0}, discrete, discrete));
  CHECK_FALSE(is_homeomorphism({0, 1}, discrete, sierpinski));
  CHECK_FALSE(is_homeomorphism({0, 0}, discrete, discrete));
}

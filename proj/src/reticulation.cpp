#include "rlx/reticulation.hpp"

#include <algorithm>
#include <stdexcept>

#include "rlx/lifting.hpp"
#include "rlx/spectra.hpp"

namespace rlx {

Subset Reticulation::image(Subset s) const {
  Subset r;
  for (Element x : s) r.insert(lambda[x]);
  return r;
}

Subset Reticulation::preimage(Subset s) const {
  Subset r;
  for (std::size_t x = 0; x < lambda.size(); ++x)
    if (s.contains(lambda[x])) r.insert(static_cast<Element>(x));
  return r;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

bool power_below(const ResiduatedLattice& a, Element x, Element y) {
  return a.leq(a.idempotent_power(x), y);
}

std::array<bool, 5> check_axioms(const Reticulation& r) {
  const ResiduatedLattice& a = r.source;
  const BDLattice& l = r.lattice;
  std::array<bool, 5> ok{true, true, true, true, true};
  Subset hit;
  for (Element x = 0; x < a.size(); ++x) {
    hit.insert(r.lambda[x]);
    for (Element y = 0; y < a.size(); ++y) {
      ok[0] = ok[0] && r.lambda[a.odot(x, y)] == l.meet(r.lambda[x], r.lambda[y]);
      ok[1] = ok[1] && r.lambda[a.join(x, y)] == l.join(r.lambda[x], r.lambda[y]);
      // Some power below y, with exponents up to |A|.
      bool some = false;
      for (std::size_t n = 1; n <= a.size() && !some; ++n) some = a.leq(a.power(x, n), y);
      ok[4] = ok[4] && l.leq(r.lambda[x], r.lambda[y]) == some;
    }
  }
  ok[2] = r.lambda[a.bot()] == l.bot() && r.lambda[a.top()] == l.top();
  ok[3] = hit == l.carrier();
  return ok;
}

void require_axioms(const Reticulation& r) {
  const std::array<bool, 5> ok = check_axioms(r);
  require(ok[0], "lambda(a * b) != lambda(a) ^ lambda(b)");
  require(ok[1], "lambda(a v b) != lambda(a) v lambda(b)");
  require(ok[2], "lambda does not preserve bounds");
  require(ok[3], "lambda is not surjective");
  require(ok[4], "lambda order differs from the power order");
}

RawLattice lattice_from_order(std::vector<std::string> labels, std::vector<std::uint8_t> leq, Element bot, Element top) {
  RawLattice raw;
  raw.labels = std::move(labels);
  raw.leq = std::move(leq);
  raw.bot = bot;
  raw.top = top;
  return raw;
}

}  // namespace

Reticulation build_reticulation(const ResiduatedLattice& a) {
  std::vector<Filter> filters = all_filters(a);
  std::stable_sort(filters.begin(), filters.end(),
                   [](const Filter& f, const Filter& g) { return filter_less(g, f); });
  const std::size_t k = filters.size();
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(a.label(min_generator(a, filters[i])));
    for (std::size_t j = 0; j < k; ++j) leq[i * k + j] = filters[j].members.subset_of(filters[i].members);
  }
  // Distinct principal filters can share a least-element label only if they
  // are equal, so labels are distinct.
  Reticulation r{a, validate_bdl(lattice_from_order(std::move(labels), std::move(leq), 0, static_cast<Element>(k - 1))),
                 std::vector<Element>(a.size()), filters};
  for (Element x = 0; x < a.size(); ++x) {
    const Filter fx = principal_filter(a, x);
    r.lambda[x] = static_cast<Element>(std::find(filters.begin(), filters.end(), fx) - filters.begin());
  }
  require_axioms(r);
  return r;
}

Reticulation build_reticulation_by_powers(const ResiduatedLattice& a) {
  const std::size_t n = a.size();
  std::vector<Element> cls(n, 0), section;
  for (Element x = 0; x < n; ++x) {
    bool placed = false;
    for (std::size_t c = 0; c < section.size() && !placed; ++c) {
      const Element s = section[c];
      if (power_below(a, x, s) && power_below(a, s, x)) {
        cls[x] = static_cast<Element>(c);
        placed = true;
      }
    }
    if (!placed) {
      cls[x] = static_cast<Element>(section.size());
      section.push_back(x);
    }
  }
  const std::size_t k = section.size();
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(a.label(section[i]));
    for (std::size_t j = 0; j < k; ++j) leq[i * k + j] = power_below(a, section[i], section[j]);
  }
  Reticulation r{a, validate_bdl(lattice_from_order(std::move(labels), std::move(leq), cls[a.bot()], cls[a.top()])),
                 cls, std::vector<Filter>(k)};
  for (std::size_t i = 0; i < k; ++i) r.filter_of[i] = principal_filter(a, section[i]);
  require_axioms(r);
  return r;
}

bool ReticVerdict::all() const {
  return std::all_of(axioms.begin(), axioms.end(), [](bool b) { return b; }) &&
         std::all_of(properties.begin(), properties.end(), [](bool b) { return b; });
}

namespace {

// Maps point i of `from` to the index in `to` of preimage(from.points[i]).
std::optional<std::vector<Element>> preimage_map(const Reticulation& r, const SpectrumSpace& from, const SpectrumSpace& to) {
  if (from.points.size() != to.points.size()) return std::nullopt;
  std::vector<Element> f;
  for (Subset p : from.points) {
    const std::optional<Element> j = to.index_of(r.preimage(p));
    if (!j) return std::nullopt;
    f.push_back(*j);
  }
  return f;
}

bool order_isomorphism(const BDLattice& x, const BDLattice& y, const std::vector<Element>& f) {
  if (x.size() != y.size()) return false;
  Subset hit;
  for (Element v : f) hit.insert(v);
  if (hit != y.carrier()) return false;
  for (Element i = 0; i < x.size(); ++i)
    for (Element j = 0; j < x.size(); ++j)
      if (x.leq(i, j) != y.leq(f[i], f[j])) return false;
  return true;
}

}  // namespace

ReticVerdict verify_retic_properties(const Reticulation& r) {
  ReticVerdict v;
  v.axioms = check_axioms(r);
  const ResiduatedLattice& a = r.source;
  const BDLattice& l = r.lattice;
  auto& p = v.properties;
  p.fill(true);

  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      p[0] = p[0] && r.lambda[a.meet(x, y)] == l.meet(r.lambda[x], r.lambda[y]);
      p[1] = p[1] && (r.lambda[x] == r.lambda[y]) == (principal_filter(a, x) == principal_filter(a, y));
    }
  p[0] = p[0] && v.axioms[1] && v.axioms[2];
  for (Element x = 0; x < a.size(); ++x)
    for (std::size_t n = 1; n <= a.size(); ++n) p[2] = p[2] && r.lambda[a.power(x, n)] == r.lambda[x];

  // Filters: preimage is a bijection onto Filt(A) that preserves and reflects
  // inclusion, with inverse the image map.
  const std::vector<Subset> lfilters = lattice_filters(l);
  const std::vector<Filter> afilters = all_filters(a);
  std::vector<Subset> pre;
  for (Subset g : lfilters) {
    const Subset h = r.preimage(g);
    p[3] = p[3] && is_filter(a, h) && r.image(h) == g;
    pre.push_back(h);
  }
  for (const Filter& f : afilters) p[3] = p[3] && std::find(pre.begin(), pre.end(), f.members) != pre.end();
  p[3] = p[3] && lfilters.size() == afilters.size();
  for (std::size_t i = 0; i < lfilters.size(); ++i)
    for (std::size_t j = 0; j < lfilters.size(); ++j)
      p[3] = p[3] && lfilters[i].subset_of(lfilters[j]) == pre[i].subset_of(pre[j]);

  const SpectrumSpace lspec = lattice_stone_spec(l), aspec = stone_spec(a);
  const auto fs = preimage_map(r, lspec, aspec);
  p[4] = fs && is_homeomorphism(*fs, lspec.space, aspec.space);
  const SpectrumSpace lmax = lattice_stone_max(l), amax = stone_max(a);
  const auto fm = preimage_map(r, lmax, amax);
  p[5] = fm && is_homeomorphism(*fm, lmax.space, amax.space);

  // lambda restricted to B(A) is a Boolean isomorphism onto B(L(A)).
  const Subset ba = classify(a).boolean_center, bl = boolean_center(l);
  p[6] = r.image(ba) == bl && r.image(ba).count() == ba.count();
  for (Element e : ba) {
    const Element ne = r.lambda[a.neg(e)];
    p[6] = p[6] && l.meet(ne, r.lambda[e]) == l.bot() && l.join(ne, r.lambda[e]) == l.top();
    for (Element f : ba)
      p[6] = p[6] && r.lambda[a.meet(e, f)] == l.meet(r.lambda[e], r.lambda[f]) &&
             r.lambda[a.join(e, f)] == l.join(r.lambda[e], r.lambda[f]);
  }

  // L(A/F) against L(A)/lambda(F).
  for (const Filter& f : afilters) {
    if (!p[7]) break;
    const Quotient q = quotient(a, f);
    const Reticulation rq = build_reticulation(q.quotient);
    const LatticeQuotient lq = lattice_quotient(l, r.image(f.members));
    std::vector<Element> phi(rq.lattice.size(), 0);
    std::vector<bool> set(rq.lattice.size(), false);
    for (Element x = 0; x < a.size(); ++x) {
      const Element from = rq.lambda[q.class_of[x]], to = lq.class_of[r.lambda[x]];
      if (set[from] && phi[from] != to) p[7] = false;
      phi[from] = to;
      set[from] = true;
    }
    p[7] = p[7] && order_isomorphism(rq.lattice, lq.quotient, phi);
  }
  return v;
}

std::vector<Element> uniqueness_check(const Reticulation& r1, const Reticulation& r2) {
  const auto f = find_lattice_isomorphism(r1.lattice, r2.lattice, [&](const std::vector<Element>& g) {
    for (std::size_t x = 0; x < r1.lambda.size(); ++x)
      if (g[r1.lambda[x]] != r2.lambda[x]) return false;
    return true;
  });
  if (!f) throw NoIsomorphism("no lattice isomorphism commutes with the two surjections");
  return *f;
}

bool is_morphism(const ResiduatedLattice& s, const ResiduatedLattice& t, const std::vector<Element>& m) {
  if (m.size() != s.size()) return false;
  for (Element v : m)
    if (v >= t.size()) return false;
  if (m[s.bot()] != t.bot() || m[s.top()] != t.top()) return false;
  for (Element x = 0; x < s.size(); ++x)
    for (Element y = 0; y < s.size(); ++y)
      if (m[s.join(x, y)] != t.join(m[x], m[y]) || m[s.meet(x, y)] != t.meet(m[x], m[y]) ||
          m[s.odot(x, y)] != t.odot(m[x], m[y]) || m[s.imp(x, y)] != t.imp(m[x], m[y]))
        return false;
  return true;
}

RLMorphism make_morphism(const ResiduatedLattice& s, const ResiduatedLattice& t, std::vector<Element> map) {
  if (!is_morphism(s, t, map)) throw InvalidArgument("map is not a morphism of residuated lattices");
  return {s, t, std::move(map)};
}

std::vector<RLMorphism> enumerate_morphisms(const ResiduatedLattice& s, const ResiduatedLattice& t) {
  std::vector<RLMorphism> out;
  const std::size_t n = s.size();
  std::vector<Element> m(n, 0);
  std::vector<bool> fixed(n, false);
  // Backtracking in id order; each new value is checked against all pairs of
  // already assigned elements.
  auto consistent = [&](Element x) {
    for (Element y = 0; y <= x; ++y) {
      auto check = [&](Element r, Element want) { return r > x || m[r] == want; };
      if (!check(s.join(x, y), t.join(m[x], m[y])) || !check(s.meet(x, y), t.meet(m[x], m[y])) ||
          !check(s.odot(x, y), t.odot(m[x], m[y])) || !check(s.imp(x, y), t.imp(m[x], m[y])) ||
          !check(s.imp(y, x), t.imp(m[y], m[x])))
        return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, Element x) -> void {
    if (x == n) {
      if (is_morphism(s, t, m)) out.push_back({s, t, m});
      return;
    }
    for (Element v = 0; v < t.size(); ++v) {
      if (x == s.bot() && v != t.bot()) continue;
      if (x == s.top() && v != t.top()) continue;
      m[x] = v;
      if (consistent(x)) self(self, x + 1);
    }
  };
  rec(rec, 0);
  return out;
}

RLMorphism compose(const RLMorphism& g, const RLMorphism& f) {
  std::vector<Element> m(f.map.size());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = g.map[f.map[x]];
  return {f.source, g.target, std::move(m)};
}

RLMorphism identity_morphism(const ResiduatedLattice& a) {
  std::vector<Element> m(a.size());
  for (Element x = 0; x < a.size(); ++x) m[x] = x;
  return {a, a, std::move(m)};
}

std::vector<Element> reticulate_morphism(const RLMorphism& f) {
  return reticulate_morphism(f, build_reticulation(f.source), build_reticulation(f.target));
}

std::vector<Element> reticulate_morphism(const RLMorphism& f, const Reticulation& rb, const Reticulation& rc) {
  const BDLattice& lb = rb.lattice;
  const BDLattice& lc = rc.lattice;
  std::vector<Element> out(lb.size(), 0);
  std::vector<bool> set(lb.size(), false);
  for (Element b = 0; b < f.source.size(); ++b) {
    const Element from = rb.lambda[b], to = rc.lambda[f.map[b]];
    require(!set[from] || out[from] == to, "L(f) is not well defined");
    out[from] = to;
    set[from] = true;
  }
  require(out[lb.bot()] == lc.bot() && out[lb.top()] == lc.top(), "L(f) does not preserve bounds");
  for (Element x = 0; x < lb.size(); ++x)
    for (Element y = 0; y < lb.size(); ++y)
      require(out[lb.join(x, y)] == lc.join(out[x], out[y]) && out[lb.meet(x, y)] == lc.meet(out[x], out[y]),
              "L(f) is not a lattice morphism");
  return out;
}

BlpTransfer blp_transfer(const ResiduatedLattice& a, const Filter& f) { return blp_transfer(build_reticulation(a), f); }

BlpTransfer blp_transfer(const Reticulation& r, const Filter& f) {
  BlpTransfer t;
  t.in_algebra = has_phi_lp(r.source, blp_formula(), f).holds;
  t.in_lattice = lattice_filter_blp(r.lattice, r.image(f.members)).holds;
  return t;
}

ArchimedeanBridge archimedean_bridge(const Reticulation& r) {
  const ResiduatedLattice& a = r.source;
  const BDLattice& l = r.lattice;
  ArchimedeanBridge b;
  const ElementClassReport c = classify(a);
  const Subset bl = boolean_center(l);
  b.elementwise = true;
  for (Element x = 0; x < a.size(); ++x)
    b.elementwise = b.elementwise && c.archimedeans.contains(x) == bl.contains(r.lambda[x]);
  b.hyperarchimedean = c.is_hyperarchimedean == is_boolean_lattice(l);
  b.radical = r.image(radical(a).members) == lattice_radical(l);
  const std::size_t ma = max_spec(a).size(), ml = lattice_max_spec(l).size();
  b.local = (ma == 1) == (ml == 1);
  b.semilocal = ma == ml;
  return b;
}

}  // namespace rlx

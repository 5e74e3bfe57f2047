#include "rlx/spectra.hpp"

#include <algorithm>
#include <stdexcept>

#include "rlx/dlattice.hpp"
#include "rlx/reticulation.hpp"

namespace rlx {

Subset open_of(const SpectrumSpace& space, Subset s) {
  Subset r;
  for (std::size_t i = 0; i < space.points.size(); ++i)
    if (!s.subset_of(space.points[i])) r.insert(static_cast<Element>(i));
  return r;
}

Subset closed_of(const SpectrumSpace& space, Subset s) {
  return open_of(space, s).complement_in(space.points.size());
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

SpectrumSpace build_space(const ResiduatedLattice& a, std::vector<Subset> points, bool prime) {
  SpectrumSpace s;
  s.points = std::move(points);
  const std::vector<Filter> filters = all_filters(a);
  std::vector<Subset> opens;
  for (const Filter& f : filters) opens.push_back(open_of(s, f.members));
  s.space = FiniteSpace::generated_by(s.points.size(), opens);
  for (Element x = 0; x < a.size(); ++x) {
    s.basis.push_back(open_of(s, Subset::single(x)));
    s.basis_generator.push_back(x);
  }
  require(is_basis(s.space, s.basis), "basic opens do not form a basis");

  const Subset all = s.space.points();
  auto d = [&](Element x) { return s.basis[x]; };
  require(d(a.bot()) == all && d(a.top()).empty(), "D(0) or D(1) wrong");
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      require(d(a.join(x, y)) == (d(x) & d(y)), "D(a v b) != D(a) n D(b)");
      require(d(a.odot(x, y)) == (d(x) | d(y)), "D(a * b) != D(a) u D(b)");
      require(d(a.meet(x, y)) == (d(x) | d(y)), "D(a ^ b) != D(a) u D(b)");
    }
  for (Element e : classify(a).boolean_center)
    require(d(e) == closed_of(s, Subset::single(a.neg(e))), "D(e) != V(!e)");
  for (const Filter& f : filters) {
    Subset u;
    for (Element x : f.members) u |= d(x);
    require(open_of(s, f.members) == u, "D(F) is not the union of D(a), a in F");
    for (const Filter& g : filters) {
      const Subset df = open_of(s, f.members), dg = open_of(s, g.members);
      require(open_of(s, filter_join(a, f, g).members) == (df | dg), "D(F v G) != D(F) u D(G)");
      require(open_of(s, filter_meet(f, g).members) == (df & dg), "D(F n G) != D(F) n D(G)");
      if (prime) require(df.subset_of(dg) == f.members.subset_of(g.members), "D is not an order embedding");
    }
  }
  return s;
}

std::vector<Subset> members_of(const std::vector<Filter>& fs) {
  std::vector<Subset> r;
  for (const Filter& f : fs) r.push_back(f.members);
  return r;
}

// Spectral conditions shared by A and L(A): primes and maximals as subsets,
// with `maximal[i]` the index in the prime spectrum of the i-th maximal.
struct Spectral {
  std::vector<Subset> primes;
  std::vector<Subset> maxima;
  std::vector<Element> maximal;
  FiniteSpace space;
};

Spectral spectral_of(const SpectrumSpace& spec, const std::vector<Subset>& maxima) {
  Spectral s{spec.points, maxima, {}, spec.space};
  for (Subset m : maxima) s.maximal.push_back(*spec.index_of(m));
  return s;
}

bool unique_maximal_over_primes(const Spectral& s) {
  for (Subset p : s.primes) {
    std::size_t count = 0;
    for (Subset m : s.maxima) count += p.subset_of(m);
    if (count != 1) return false;
  }
  return true;
}

bool primes_below_closed(const Spectral& s) {
  for (Subset m : s.maxima) {
    Subset below;
    for (std::size_t i = 0; i < s.primes.size(); ++i)
      if (s.primes[i].subset_of(m)) below.insert(static_cast<Element>(i));
    if (!s.space.is_closed(below)) return false;
  }
  return true;
}

bool only_maximal_over_meet(const Spectral& s, Subset carrier) {
  for (Subset m : s.maxima) {
    Subset meet = carrier;
    for (Subset p : s.primes)
      if (p.subset_of(m)) meet &= p;
    for (Subset n : s.maxima)
      if (n != m && meet.subset_of(n)) return false;
  }
  return true;
}

bool maxima_separated(const Spectral& s) {
  const std::vector<Subset>& opens = s.space.opens();
  for (std::size_t i = 0; i < s.maximal.size(); ++i)
    for (std::size_t j = i + 1; j < s.maximal.size(); ++j) {
      const Element p = s.maximal[i], q = s.maximal[j];
      bool found = false;
      for (Subset u : opens) {
        if (!u.contains(p) || u.contains(q)) continue;
        for (Subset v : opens)
          if (v.contains(q) && !u.intersects(v)) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

void spectral_conditions(const Spectral& s, Subset carrier, std::array<bool, 15>& out, std::size_t offset) {
  out[3 + offset] = unique_maximal_over_primes(s);
  out[5 + offset] = has_continuous_retract(s.space, s.maximal);
  out[7 + offset] = is_normal_space(s.space);
  out[9 + offset] = primes_below_closed(s);
  out[11 + offset] = only_maximal_over_meet(s, carrier);
  out[13 + offset] = maxima_separated(s);
}

}  // namespace

SpectrumSpace stone_spec(const ResiduatedLattice& a) { return build_space(a, members_of(spec(a)), true); }
SpectrumSpace stone_max(const ResiduatedLattice& a) { return build_space(a, members_of(max_spec(a)), false); }

std::vector<Subset> clopen_sets(const SpectrumSpace& space) { return space.space.clopens(); }

std::vector<Subset> clopen_via_boolean(const ResiduatedLattice& a, SpectrumKind which) {
  const SpectrumSpace s = which == SpectrumKind::Prime ? stone_spec(a) : stone_max(a);
  std::vector<Subset> r;
  for (Element e : classify(a).boolean_center) r.push_back(s.basis[e]);
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

bool is_gelfand(const ResiduatedLattice& a) {
  const std::vector<Filter> maxima = max_spec(a);
  for (const Filter& p : spec(a)) {
    std::size_t count = 0;
    for (const Filter& m : maxima) count += p.members.subset_of(m.members);
    if (count != 1) return false;
  }
  return true;
}

bool has_continuous_retract(const FiniteSpace& spec, const std::vector<Element>& maximal,
                            std::optional<std::vector<Element>>* retract) {
  const std::size_t n = spec.size();
  Subset max_points;
  for (Element m : maximal) max_points.insert(m);
  // Candidate images of each point. A continuous map sends the closure of
  // {p} into the closure of the image of p, which is a single point in the
  // T1 subspace of maxima; so every maximal in that closure must be the image.
  std::vector<std::vector<Element>> candidates(n);
  for (Element p = 0; p < n; ++p) {
    const Subset forced = spec.closure(Subset::single(p)) & max_points;
    if (forced.count() > 1) return false;
    if (forced.count() == 1)
      candidates[p].push_back(forced.first());
    else
      candidates[p] = maximal;
  }
  std::vector<std::size_t> choice(n, 0);
  std::vector<Element> f(n);
  const FiniteSpace sub = spec.subspace(max_points);
  std::vector<Element> rank(n, 0);
  {
    Element k = 0;
    for (Element m : max_points) rank[m] = k++;
  }
  while (true) {
    for (Element p = 0; p < n; ++p) {
      if (candidates[p].empty()) return false;
      f[p] = rank[candidates[p][choice[p]]];
    }
    if (is_continuous(f, spec, sub)) {
      if (retract) *retract = f;
      return true;
    }
    std::size_t i = 0;
    while (i < n && ++choice[i] == candidates[i].size()) choice[i++] = 0;
    if (i == n) return false;
  }
}

bool GelfandConditions::all_agree() const {
  return std::all_of(holds.begin(), holds.end(), [&](bool b) { return b == holds[0]; });
}

GelfandConditions gelfand_conditions(const ResiduatedLattice& a) { return gelfand_conditions(a, build_reticulation(a)); }

GelfandConditions gelfand_conditions(const ResiduatedLattice& a, const Reticulation& r) {
  GelfandConditions g;
  const std::vector<Filter> filters = all_filters(a);
  const Filter trivial{Subset::single(a.top())}, whole{a.carrier()};

  g.holds[0] = true;
  for (const Filter& f : filters)
    for (const Filter& h : filters) {
      if (filter_join(a, f, h) != whole) continue;
      bool found = false;
      for (const Filter& u : filters) {
        if (filter_join(a, u, f) != whole) continue;
        for (const Filter& v : filters)
          if (filter_meet(u, v) == trivial && filter_join(a, v, h) == whole) {
            found = true;
            break;
          }
        if (found) break;
      }
      g.holds[0] = g.holds[0] && found;
    }

  g.holds[1] = true;
  for (Element x = 0; x < a.size() && g.holds[1]; ++x)
    for (Element y = 0; y < a.size() && g.holds[1]; ++y) {
      const Filter fx = principal_filter(a, x), fy = principal_filter(a, y);
      if (filter_join(a, fx, fy) != whole) continue;
      bool found = false;
      for (Element u = 0; u < a.size() && !found; ++u) {
        const Filter fu = principal_filter(a, u);
        if (filter_join(a, fu, fx) != whole) continue;
        for (Element v = 0; v < a.size() && !found; ++v) {
          const Filter fv = principal_filter(a, v);
          found = filter_meet(fu, fv) == trivial && filter_join(a, fv, fy) == whole;
        }
      }
      g.holds[1] = found;
    }

  g.holds[2] = is_conormal_lattice(r.lattice);

  const SpectrumSpace sa = stone_spec(a);
  spectral_conditions(spectral_of(sa, members_of(max_spec(a))), a.carrier(), g.holds, 0);
  const SpectrumSpace sl = lattice_stone_spec(r.lattice);
  spectral_conditions(spectral_of(sl, lattice_max_spec(r.lattice)), r.lattice.carrier(), g.holds, 1);
  return g;
}

std::vector<Element> gelfand_retract(const ResiduatedLattice& a) {
  if (!is_gelfand(a)) throw NotGelfand("some prime filter lies under several maximal filters");
  const SpectrumSpace sp = stone_spec(a), mx = stone_max(a);
  std::vector<Element> rho(sp.points.size());
  for (std::size_t i = 0; i < sp.points.size(); ++i)
    for (std::size_t j = 0; j < mx.points.size(); ++j)
      if (sp.points[i].subset_of(mx.points[j])) rho[i] = static_cast<Element>(j);
  for (std::size_t j = 0; j < mx.points.size(); ++j)
    require(rho[*sp.index_of(mx.points[j])] == j, "retract is not the identity on maxima");
  require(is_continuous(rho, sp.space, mx.space), "retract is not continuous");
  return rho;
}

bool StarReport::all_agree() const {
  return std::all_of(forms.begin(), forms.end(), [&](bool b) { return b == forms[0]; });
}

StarReport star_property(const ResiduatedLattice& a) {
  StarReport r;
  const Subset boolean = classify(a).boolean_center;
  const Subset rad = radical(a).members;
  const SpectrumSpace mx = stone_max(a);
  auto v = [&](Element x) { return closed_of(mx, Subset::single(x)); };
  auto d = [&](Element x) { return open_of(mx, Subset::single(x)); };

  r.forms.fill(true);
  for (Element x = 0; x < a.size(); ++x) {
    const Filter fx = principal_filter(a, x);
    bool direct = false, nil = false, topo = false, powers = false;
    for (Element e : boolean) {
      for (Element u : rad) direct = direct || principal_filter(a, a.odot(u, e)) == fx;
      nil = nil || (is_nilpotent(a, a.odot(x, e)) && rad.contains(a.join(x, e)));
      const bool first = v(x).subset_of(d(e));
      topo = topo || (first && d(x).subset_of(v(e)));
      bool all_n = first;
      for (std::size_t n = 1; n <= a.size() && all_n; ++n) all_n = v(a.neg(a.power(x, n))).subset_of(v(e));
      powers = powers || all_n;
    }
    if (!direct && !r.witness) r.witness = x;
    r.forms[0] = r.forms[0] && direct;
    r.forms[1] = r.forms[1] && nil;
    r.forms[2] = r.forms[2] && topo;
    r.forms[3] = r.forms[3] && powers;
  }
  r.holds = r.forms[0];
  return r;
}

StarStarReport star_star_property(const ResiduatedLattice& a) {
  StarStarReport r;
  r.holds = true;
  const Subset boolean = classify(a).boolean_center;
  for (Element x = 0; x < a.size(); ++x) {
    const Filter fx = principal_filter(a, x);
    bool found = false;
    for (Element u = 0; u < a.size() && !found; ++u) {
      if (!is_nilpotent(a, a.neg(u))) continue;
      for (Element e : boolean) found = found || principal_filter(a, a.odot(u, e)) == fx;
    }
    if (!found) {
      r.holds = false;
      r.witness = x;
      break;
    }
  }
  return r;
}

}  // namespace rlx

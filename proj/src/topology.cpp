#include "rlx/topology.hpp"

#include <algorithm>
#include <set>

namespace rlx {

FiniteSpace FiniteSpace::generated_by(std::size_t n_points, const std::vector<Subset>& family) {
  FiniteSpace x;
  x.n_ = n_points;
  const Subset all = Subset::full(n_points);
  // Finite intersections first, then unions of those.
  std::set<Subset> inter{all};
  for (Subset s : family) {
    std::vector<Subset> add;
    for (Subset t : inter) add.push_back(t & s & all);
    inter.insert(add.begin(), add.end());
  }
  std::set<Subset> opens{Subset{}};
  for (Subset s : inter) {
    std::vector<Subset> add;
    for (Subset t : opens) add.push_back(t | s);
    opens.insert(add.begin(), add.end());
  }
  x.opens_.assign(opens.begin(), opens.end());
  return x;
}

bool FiniteSpace::is_open(Subset s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }

Subset FiniteSpace::closure(Subset s) const {
  Subset c = points();
  for (Subset u : opens_) {
    Subset closed = u.complement_in(n_);
    if (s.subset_of(closed)) c &= closed;
  }
  return c;
}

Subset FiniteSpace::interior(Subset s) const {
  Subset r;
  for (Subset u : opens_)
    if (u.subset_of(s)) r |= u;
  return r;
}

std::vector<Subset> FiniteSpace::clopens() const {
  std::vector<Subset> r;
  for (Subset u : opens_)
    if (is_closed(u)) r.push_back(u);
  return r;
}

std::vector<Subset> FiniteSpace::closed_sets() const {
  std::vector<Subset> r;
  for (Subset u : opens_) r.push_back(u.complement_in(n_));
  std::sort(r.begin(), r.end());
  return r;
}

FiniteSpace FiniteSpace::subspace(Subset sub) const {
  const std::vector<Element> idx = sub.to_vector();
  std::vector<Subset> family;
  for (Subset u : opens_) {
    Subset t;
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (u.contains(idx[i])) t.insert(static_cast<Element>(i));
    family.push_back(t);
  }
  return generated_by(idx.size(), family);
}

bool is_t0(const FiniteSpace& x) {
  for (Element p = 0; p < x.size(); ++p)
    for (Element q = p + 1; q < x.size(); ++q) {
      bool separated = false;
      for (Subset u : x.opens())
        if (u.contains(p) != u.contains(q)) {
          separated = true;
          break;
        }
      if (!separated) return false;
    }
  return true;
}

bool is_t1(const FiniteSpace& x) {
  for (Element p = 0; p < x.size(); ++p)
    if (!x.is_closed(Subset::single(p))) return false;
  return true;
}

bool is_hausdorff(const FiniteSpace& x) {
  for (Element p = 0; p < x.size(); ++p)
    for (Element q = p + 1; q < x.size(); ++q) {
      bool separated = false;
      for (Subset u : x.opens()) {
        if (!u.contains(p) || u.contains(q)) continue;
        for (Subset v : x.opens())
          if (v.contains(q) && !u.intersects(v)) {
            separated = true;
            break;
          }
        if (separated) break;
      }
      if (!separated) return false;
    }
  return true;
}

bool is_zero_dimensional(const FiniteSpace& x) {
  const std::vector<Subset> cl = x.clopens();
  for (Subset u : x.opens()) {
    Subset covered;
    for (Subset c : cl)
      if (c.subset_of(u)) covered |= c;
    if (covered != u) return false;
  }
  return true;
}

bool is_strongly_zero_dimensional(const FiniteSpace& x) {
  const Subset all = x.points();
  const std::vector<Subset> cl = x.clopens();
  for (Subset u : x.opens())
    for (Subset v : x.opens()) {
      if ((u | v) != all) continue;
      bool found = false;
      for (Subset c : cl)
        if (c.subset_of(u) && c.complement_in(x.size()).subset_of(v)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

bool is_normal_space(const FiniteSpace& x) {
  const std::vector<Subset> closed = x.closed_sets();
  for (Subset c1 : closed)
    for (Subset c2 : closed) {
      if (c1.intersects(c2)) continue;
      bool separated = false;
      for (Subset u : x.opens()) {
        if (!c1.subset_of(u)) continue;
        for (Subset v : x.opens())
          if (c2.subset_of(v) && !u.intersects(v)) {
            separated = true;
            break;
          }
        if (separated) break;
      }
      if (!separated) return false;
    }
  return true;
}

bool is_basis(const FiniteSpace& x, const std::vector<Subset>& family) {
  for (Subset b : family)
    if (!x.is_open(b)) return false;
  for (Subset u : x.opens()) {
    Subset covered;
    for (Subset b : family)
      if (b.subset_of(u)) covered |= b;
    if (covered != u) return false;
  }
  return true;
}

TopologyPredicates topology_predicates(const FiniteSpace& x) {
  TopologyPredicates p;
  p.t0 = is_t0(x);
  p.t1 = is_t1(x);
  p.hausdorff = is_hausdorff(x);
  p.compact = true;
  p.zero_dim = is_zero_dimensional(x);
  p.strongly_zero_dim = is_strongly_zero_dimensional(x);
  p.normal = is_normal_space(x);
  p.boolean_space = p.compact && p.hausdorff && p.zero_dim;
  return p;
}

bool is_continuous(const std::vector<Element>& f, const FiniteSpace& x, const FiniteSpace& y) {
  if (f.size() != x.size()) return false;
  for (Subset v : y.opens()) {
    Subset pre;
    for (Element p = 0; p < x.size(); ++p)
      if (v.contains(f[p])) pre.insert(p);
    if (!x.is_open(pre)) return false;
  }
  return true;
}

bool is_homeomorphism(const std::vector<Element>& f, const FiniteSpace& x, const FiniteSpace& y) {
  if (f.size() != x.size() || x.size() != y.size()) return false;
  Subset image;
  for (Element p : f) {
    if (p >= y.size()) return false;
    image.insert(p);
  }
  if (image != y.points()) return false;
  for (Subset u : x.opens()) {
    Subset img;
    for (Element p : u) img.insert(f[p]);
    if (!y.is_open(img)) return false;
  }
  return is_continuous(f, x, y);
}

std::optional<Element> SpectrumSpace::index_of(Subset filter) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == filter) return static_cast<Element>(i);
  return std::nullopt;
}

}  // namespace rlx

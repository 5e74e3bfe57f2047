#include "rlx/dlattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "rlx/formula.hpp"

namespace rlx {

std::optional<Element> BDLattice::find(std::string_view label) const {
  for (Element a = 0; a < n_; ++a)
    if (labels_[a] == label) return a;
  return std::nullopt;
}

RawLattice BDLattice::raw() const {
  RawLattice r;
  r.labels = labels_;
  r.leq = leq_;
  r.join = join_;
  r.meet = meet_;
  r.bot = bot_;
  r.top = top_;
  return r;
}

bool BDLattice::operator==(const BDLattice& o) const {
  return n_ == o.n_ && labels_ == o.labels_ && leq_ == o.leq_ && bot_ == o.bot_ && top_ == o.top_;
}

BDLattice validate_bdl(const RawLattice& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw InvalidArgument("empty carrier");
  if (n > kMaxCarrier) throw InvalidArgument("carrier larger than 64");
  if (raw.leq.size() != n * n) throw InvalidArgument("order matrix has wrong size");
  if (raw.bot >= n || raw.top >= n) throw InvalidArgument("bottom/top id out of range");
  for (const auto* t : {&raw.join, &raw.meet})
    if (*t && ((*t)->size() != n * n ||
               std::any_of((*t)->begin(), (*t)->end(), [n](Element v) { return v >= n; })))
      throw InvalidArgument("lattice table has wrong shape");
  {
    std::set<std::string> seen;
    for (const auto& l : raw.labels)
      if (l.empty() || !seen.insert(l).second) throw InvalidArgument("labels must be non-empty and distinct");
  }
  auto le = [&](Element x, Element y) { return raw.leq[x * n + y] != 0; };
  for (Element a = 0; a < n; ++a)
    if (!le(a, a)) throw AxiomViolation("reflexivity", {a});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (a != b && le(a, b) && le(b, a)) throw AxiomViolation("antisymmetry", {a, b});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (le(a, b) && le(b, c) && !le(a, c)) throw AxiomViolation("transitivity", {a, b, c});
  for (Element a = 0; a < n; ++a) {
    if (!le(raw.bot, a)) throw AxiomViolation("bottom", {a});
    if (!le(a, raw.top)) throw AxiomViolation("top", {a});
  }

  BDLattice l;
  l.n_ = n;
  l.labels_ = raw.labels;
  l.leq_ = raw.leq;
  l.bot_ = raw.bot;
  l.top_ = raw.top;
  l.join_.resize(n * n);
  l.meet_.resize(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      std::optional<Element> j, m;
      for (Element c = 0; c < n && !j; ++c) {
        if (!le(a, c) || !le(b, c)) continue;
        bool least = true;
        for (Element d = 0; d < n && least; ++d)
          if (le(a, d) && le(b, d) && !le(c, d)) least = false;
        if (least) j = c;
      }
      if (!j) throw AxiomViolation("join-exists", {a, b});
      for (Element c = 0; c < n && !m; ++c) {
        if (!le(c, a) || !le(c, b)) continue;
        bool greatest = true;
        for (Element d = 0; d < n && greatest; ++d)
          if (le(d, a) && le(d, b) && !le(d, c)) greatest = false;
        if (greatest) m = c;
      }
      if (!m) throw AxiomViolation("meet-exists", {a, b});
      l.join_[a * n + b] = *j;
      l.meet_[a * n + b] = *m;
      if (raw.join && (*raw.join)[a * n + b] != *j) throw AxiomViolation("join-table", {a, b});
      if (raw.meet && (*raw.meet)[a * n + b] != *m) throw AxiomViolation("meet-table", {a, b});
    }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) throw NotDistributive({a, b, c});
  l.up_.resize(n);
  l.down_.resize(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (le(a, b)) {
        l.up_[a].insert(b);
        l.down_[b].insert(a);
      }
  return l;
}

BDLattice underlying_lattice(const ResiduatedLattice& a) {
  RawLattice raw;
  raw.labels = a.labels();
  raw.leq = a.leq_matrix();
  raw.join = a.join_table();
  raw.meet = a.meet_table();
  raw.bot = a.bot();
  raw.top = a.top();
  return validate_bdl(raw);
}

BDLattice permute(const BDLattice& l, const std::vector<Element>& perm) {
  const std::size_t n = l.size();
  if (perm.size() != n) throw InvalidArgument("permute: wrong permutation length");
  RawLattice raw;
  raw.labels.resize(n);
  raw.leq.assign(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    raw.labels[perm[x]] = l.label(x);
    for (Element y = 0; y < n; ++y) raw.leq[perm[x] * n + perm[y]] = l.leq(x, y);
  }
  raw.bot = perm[l.bot()];
  raw.top = perm[l.top()];
  return validate_bdl(raw);
}

bool is_boolean_element(const BDLattice& l, Element x) {
  for (Element y = 0; y < l.size(); ++y)
    if (l.join(x, y) == l.top() && l.meet(x, y) == l.bot()) return true;
  return false;
}

Subset boolean_center(const BDLattice& l) {
  Subset r;
  for (Element x = 0; x < l.size(); ++x)
    if (is_boolean_element(l, x)) r.insert(x);
  return r;
}

bool is_boolean_lattice(const BDLattice& l) { return boolean_center(l) == l.carrier(); }

bool is_lattice_filter(const BDLattice& l, Subset s) {
  if (s.empty()) return false;
  for (Element x : s) {
    if (!l.up_set(x).subset_of(s)) return false;
    for (Element y : s)
      if (!s.contains(l.meet(x, y))) return false;
  }
  return true;
}

Subset lattice_generated_filter(const BDLattice& l, Subset x) {
  Element m = l.top();
  for (Element a : x) m = l.meet(m, a);
  return l.up_set(m);
}

std::vector<Subset> lattice_filters(const BDLattice& l) {
  std::set<Subset> all;
  for (Element a = 0; a < l.size(); ++a) all.insert(l.up_set(a));
  std::vector<Subset> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    return a.count() != b.count() ? a.count() < b.count() : a < b;
  });
  return out;
}

std::vector<Subset> lattice_spec(const BDLattice& l) {
  std::vector<Subset> out;
  for (Subset f : lattice_filters(l)) {
    if (f.contains(l.bot())) continue;
    bool prime = true;
    for (Element x = 0; x < l.size() && prime; ++x)
      for (Element y = 0; y < l.size() && prime; ++y)
        if (f.contains(l.join(x, y)) && !f.contains(x) && !f.contains(y)) prime = false;
    if (prime) out.push_back(f);
  }
  return out;
}

std::vector<Subset> lattice_max_spec(const BDLattice& l) {
  const std::vector<Subset> fs = lattice_filters(l);
  std::vector<Subset> out;
  for (Subset f : fs) {
    if (f.contains(l.bot())) continue;
    bool maximal = true;
    for (Subset g : fs)
      if (g != f && !g.contains(l.bot()) && f.subset_of(g)) maximal = false;
    if (maximal) out.push_back(f);
  }
  return out;
}

Subset lattice_radical_by_maximals(const BDLattice& l) {
  Subset r = l.carrier();
  for (Subset m : lattice_max_spec(l)) r &= m;
  return r;
}

Subset lattice_radical(const BDLattice& l) {
  Subset r;
  for (Element a = 0; a < l.size(); ++a) {
    bool dense = true;
    for (Element x = 0; x < l.size() && dense; ++x)
      if (l.meet(a, x) == l.bot() && x != l.bot()) dense = false;
    if (dense) r.insert(a);
  }
  if (r != lattice_radical_by_maximals(l))
    throw std::logic_error("lattice radical differs from the intersection of maximal filters");
  return r;
}

namespace {

SpectrumSpace lattice_space(const BDLattice& l, std::vector<Subset> points) {
  SpectrumSpace s;
  s.points = std::move(points);
  auto hull = [&](Subset f) {
    Subset d;
    for (std::size_t i = 0; i < s.points.size(); ++i)
      if (!f.subset_of(s.points[i])) d.insert(static_cast<Element>(i));
    return d;
  };
  std::vector<Subset> opens;
  for (Subset f : lattice_filters(l)) opens.push_back(hull(f));
  s.space = FiniteSpace::generated_by(s.points.size(), opens);
  for (Element a = 0; a < l.size(); ++a) {
    s.basis.push_back(hull(l.up_set(a)));
    s.basis_generator.push_back(a);
  }
  return s;
}

}  // namespace

SpectrumSpace lattice_stone_spec(const BDLattice& l) { return lattice_space(l, lattice_spec(l)); }
SpectrumSpace lattice_stone_max(const BDLattice& l) { return lattice_space(l, lattice_max_spec(l)); }

LatticeQuotient lattice_quotient(const BDLattice& l, Subset filter) {
  if (!is_lattice_filter(l, filter)) throw InvalidArgument("not a lattice filter");
  const std::size_t n = l.size();
  auto equiv = [&](Element x, Element y) {
    for (Element a : filter)
      if (l.meet(x, a) == l.meet(y, a)) return true;
    return false;
  };
  LatticeQuotient q;
  q.filter = filter;
  q.class_of.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    bool placed = false;
    for (std::size_t c = 0; c < q.section.size() && !placed; ++c)
      if (equiv(x, q.section[c])) {
        q.class_of[x] = static_cast<Element>(c);
        placed = true;
      }
    if (!placed) {
      q.class_of[x] = static_cast<Element>(q.section.size());
      q.section.push_back(x);
    }
  }
  const std::size_t k = q.section.size();
  RawLattice raw;
  raw.leq.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    raw.labels.push_back(l.label(q.section[i]));
    for (std::size_t j = 0; j < k; ++j)
      raw.leq[i * k + j] = q.class_of[l.meet(q.section[i], q.section[j])] == i;
  }
  raw.bot = q.class_of[l.bot()];
  raw.top = q.class_of[l.top()];
  q.quotient = validate_bdl(raw);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (q.class_of[l.join(x, y)] != q.quotient.join(q.class_of[x], q.class_of[y]) ||
          q.class_of[l.meet(x, y)] != q.quotient.meet(q.class_of[x], q.class_of[y]))
        throw std::logic_error("lattice quotient operations are not well defined");
  return q;
}

LatticeLpEntry lattice_filter_blp(const BDLattice& l, Subset filter) {
  const LatticeQuotient q = lattice_quotient(l, filter);
  const Subset in_quotient = definable_set(q.quotient, lattice_boolean_formula());
  const Subset in_lattice = definable_set(l, lattice_boolean_formula());
  Subset lifted;
  for (Element e : in_lattice) lifted.insert(q.class_of[e]);
  LatticeLpEntry entry;
  entry.filter = filter;
  entry.holds = in_quotient.subset_of(lifted);
  if (!entry.holds)
    for (Element a = 0; a < l.size(); ++a)
      if (in_quotient.contains(q.class_of[a]) && !lifted.contains(q.class_of[a])) {
        entry.counterexample = a;
        break;
      }
  return entry;
}

LatticeBlpReport lattice_blp(const BDLattice& l) {
  LatticeBlpReport r;
  r.global = true;
  for (Subset f : lattice_filters(l)) {
    r.per_filter.push_back(lattice_filter_blp(l, f));
    r.global = r.global && r.per_filter.back().holds;
  }
  return r;
}

std::optional<SplitWitness> normal_lattice_failure(const BDLattice& l) {
  const Element n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (l.join(x, y) != l.top()) continue;
      bool found = false;
      for (Element u = 0; u < n && !found; ++u)
        for (Element v = 0; v < n && !found; ++v)
          found = l.meet(u, v) == l.bot() && l.join(u, x) == l.top() && l.join(v, y) == l.top();
      if (!found) return SplitWitness{x, y};
    }
  return std::nullopt;
}

std::optional<SplitWitness> conormal_lattice_failure(const BDLattice& l) {
  const Element n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (l.meet(x, y) != l.bot()) continue;
      bool found = false;
      for (Element u = 0; u < n && !found; ++u)
        for (Element v = 0; v < n && !found; ++v)
          found = l.join(u, v) == l.top() && l.meet(u, x) == l.bot() && l.meet(v, y) == l.bot();
      if (!found) return SplitWitness{x, y};
    }
  return std::nullopt;
}

bool is_normal_lattice(const BDLattice& l) { return !normal_lattice_failure(l); }
bool is_conormal_lattice(const BDLattice& l) { return !conormal_lattice_failure(l); }

bool radco_check(const BDLattice& l) {
  if (!is_conormal_lattice(l)) throw NotConormal("lattice is not conormal");
  return lattice_filter_blp(l, lattice_radical(l)).holds;
}

bool lattice_unique_maximal_over_primes(const BDLattice& l) {
  const std::vector<Subset> maxs = lattice_max_spec(l);
  for (Subset p : lattice_spec(l)) {
    std::size_t above = 0;
    for (Subset m : maxs)
      if (p.subset_of(m)) ++above;
    if (above != 1) return false;
  }
  return true;
}

namespace {

std::vector<std::size_t> heights(const BDLattice& l) {
  // Longest chain from the bottom; elements sorted by down-set size form a
  // linear extension.
  const std::size_t n = l.size();
  std::vector<Element> order(n);
  for (Element x = 0; x < n; ++x) order[x] = x;
  std::sort(order.begin(), order.end(),
            [&](Element a, Element b) { return l.down_set(a).count() < l.down_set(b).count(); });
  std::vector<std::size_t> h(n, 0);
  for (Element x : order)
    for (Element y : l.down_set(x))
      if (y != x) h[x] = std::max(h[x], h[y] + 1);
  return h;
}

}  // namespace

std::optional<std::vector<Element>> find_lattice_isomorphism(
    const BDLattice& l1, const BDLattice& l2, const std::function<bool(const std::vector<Element>&)>& accept) {
  const std::size_t n = l1.size();
  if (n != l2.size()) return std::nullopt;
  const auto h1 = heights(l1), h2 = heights(l2);
  auto key = [](const BDLattice& l, const std::vector<std::size_t>& h, Element x) {
    return std::tuple{h[x], l.down_set(x).count(), l.up_set(x).count()};
  };
  std::vector<Element> order(n);
  for (Element x = 0; x < n; ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&](Element a, Element b) { return h1[a] < h1[b]; });

  std::vector<Element> f(n, 0);
  Subset used;
  std::optional<std::vector<Element>> found;
  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == n) {
      if (!accept || accept(f)) {
        found = f;
        return true;
      }
      return false;
    }
    const Element x = order[depth];
    for (Element y = 0; y < n; ++y) {
      if (used.contains(y) || key(l1, h1, x) != key(l2, h2, y)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Element z = order[k];
        ok = l1.leq(x, z) == l2.leq(y, f[z]) && l1.leq(z, x) == l2.leq(f[z], y);
      }
      if (!ok) continue;
      f[x] = y;
      used.insert(y);
      if (search(depth + 1)) return true;
      used.erase(y);
    }
    return false;
  };
  search(0);
  return found;
}

}  // namespace rlx

#include "rlx/filters.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rlx {

bool filter_less(const Filter& f, const Filter& g) {
  const std::size_t a = f.size(), b = g.size();
  return a != b ? a < b : f.members < g.members;
}

bool is_filter(const ResiduatedLattice& a, Subset s) {
  if (s.empty()) return false;
  for (Element x : s) {
    if (!a.up_set(x).subset_of(s)) return false;
    for (Element y : s)
      if (!s.contains(a.odot(x, y))) return false;
  }
  return true;
}

Filter principal_filter(const ResiduatedLattice& a, Element x) { return {a.up_set(a.idempotent_power(x))}; }

Filter generated_filter(const ResiduatedLattice& a, Subset x) {
  Element p = a.top();
  for (Element e : x) p = a.odot(p, e);
  return principal_filter(a, p);
}

std::vector<Filter> all_filters(const ResiduatedLattice& a) {
  std::set<Subset> seen;
  std::vector<Filter> out;
  for (Element x = 0; x < a.size(); ++x) {
    Filter f = principal_filter(a, x);
    if (seen.insert(f.members).second) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), filter_less);
  return out;
}

Filter filter_join(const ResiduatedLattice& a, const Filter& f, const Filter& g) {
  return generated_filter(a, f.members | g.members);
}

Filter filter_meet(const Filter& f, const Filter& g) { return {f.members & g.members}; }

bool is_prime(const ResiduatedLattice& a, const Filter& f) {
  if (!f.proper(a)) return false;
  for (Element x = 0; x < a.size(); ++x) {
    if (f.contains(x)) continue;
    for (Element y = 0; y < a.size(); ++y)
      if (!f.contains(y) && f.contains(a.join(x, y))) return false;
  }
  return true;
}

std::vector<Filter> spec(const ResiduatedLattice& a) {
  std::vector<Filter> out;
  for (const Filter& f : all_filters(a))
    if (is_prime(a, f)) out.push_back(f);
  return out;
}

std::vector<Filter> max_spec(const ResiduatedLattice& a) {
  const std::vector<Filter> fs = all_filters(a);
  std::vector<Filter> out;
  for (const Filter& f : fs) {
    if (!f.proper(a)) continue;
    bool maximal = true;
    for (const Filter& g : fs)
      if (g != f && g.proper(a) && f.members.subset_of(g.members)) {
        maximal = false;
        break;
      }
    if (maximal) {
      if (!is_prime(a, f)) throw std::logic_error("maximal filter that is not prime");
      out.push_back(f);
    }
  }
  return out;
}

Filter radical(const ResiduatedLattice& a) {
  Subset r = a.carrier();
  for (const Filter& m : max_spec(a)) r &= m.members;
  return {r};
}

bool is_local(const ResiduatedLattice& a) { return max_spec(a).size() == 1; }

bool is_semilocal(const ResiduatedLattice& a, std::size_t* count) {
  if (count) *count = max_spec(a).size();
  return true;
}

bool is_semisimple(const ResiduatedLattice& a) { return radical(a).members == Subset::single(a.top()); }

Element min_generator(const ResiduatedLattice& a, const Filter& f) {
  for (Element x : f.members)
    if (a.up_set(x) == f.members) {
      if (a.odot(x, x) != x) throw std::logic_error("filter minimum is not idempotent");
      return x;
    }
  throw NoMinimum("filter has no least element");
}

Subset Quotient::image(Subset s) const {
  Subset r;
  for (Element x : s) r.insert(class_of[x]);
  return r;
}

Subset Quotient::preimage(Subset classes) const {
  Subset r;
  for (std::size_t x = 0; x < class_of.size(); ++x)
    if (classes.contains(class_of[x])) r.insert(static_cast<Element>(x));
  return r;
}

Quotient quotient(const ResiduatedLattice& a, const Filter& f) {
  if (!is_filter(a, f.members)) throw InvalidArgument("not a filter");
  const std::size_t n = a.size();
  std::vector<Element> class_of(n, 0), section;
  for (Element x = 0; x < n; ++x) {
    bool placed = false;
    for (std::size_t c = 0; c < section.size(); ++c)
      if (f.contains(a.biresiduum(x, section[c]))) {
        class_of[x] = static_cast<Element>(c);
        placed = true;
        break;
      }
    if (!placed) {
      class_of[x] = static_cast<Element>(section.size());
      section.push_back(x);
    }
  }
  const std::size_t k = section.size();
  RawAlgebra raw;
  raw.leq.assign(k * k, 0);
  raw.join = Table(k * k);
  raw.meet = Table(k * k);
  raw.odot.resize(k * k);
  raw.imp = Table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    raw.labels.push_back(a.label(section[i]));
    for (std::size_t j = 0; j < k; ++j) {
      const Element x = section[i], y = section[j];
      raw.leq[i * k + j] = f.contains(a.imp(x, y));
      (*raw.join)[i * k + j] = class_of[a.join(x, y)];
      (*raw.meet)[i * k + j] = class_of[a.meet(x, y)];
      raw.odot[i * k + j] = class_of[a.odot(x, y)];
      (*raw.imp)[i * k + j] = class_of[a.imp(x, y)];
    }
  }
  raw.bot = class_of[a.bot()];
  raw.top = class_of[a.top()];
  // Well-definedness: every representative gives the same class.
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const std::size_t k2 = class_of[x] * k + class_of[y];
      if (class_of[a.join(x, y)] != (*raw.join)[k2] || class_of[a.meet(x, y)] != (*raw.meet)[k2] ||
          class_of[a.odot(x, y)] != raw.odot[k2] || class_of[a.imp(x, y)] != (*raw.imp)[k2])
        throw std::logic_error("quotient operations are not well defined");
    }
  Quotient q{f, std::move(class_of), std::move(section), validate(raw)};
  return q;
}

}  // namespace rlx

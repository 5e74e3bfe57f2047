#include "oracles.hpp"

#include <algorithm>
#include <numeric>

#include "rlx/text_format.hpp"

namespace oracle {

ResiduatedLattice fixture(const std::string& name) {
  return rlx::parse_rlat(rlx::read_file(kFixtures + "/" + name + ".rlat"));
}

namespace {

bool is_filter_subset(const ResiduatedLattice& a, Subset s) {
  if (s.empty()) return false;
  for (Element x : s) {
    for (Element y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && !s.contains(y)) return false;
    for (Element y : s)
      if (!s.contains(a.odot(x, y))) return false;
  }
  return true;
}

}  // namespace

std::vector<Subset> filters_by_subset_scan(const ResiduatedLattice& a) {
  std::vector<Subset> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << a.size()); ++m)
    if (is_filter_subset(a, Subset(m))) out.push_back(Subset(m));
  return out;
}

Subset generated_filter_by_fixpoint(const ResiduatedLattice& a, Subset x) {
  Subset s = x;
  s.insert(a.top());
  while (true) {
    Subset next = s;
    for (Element p : s) {
      for (Element q : s) next.insert(a.odot(p, q));
      for (Element y = 0; y < a.size(); ++y)
        if (a.leq(p, y)) next.insert(y);
    }
    if (next == s) return s;
    s = next;
  }
}

std::vector<Subset> primes_by_scan(const ResiduatedLattice& a) {
  std::vector<Subset> out;
  for (Subset f : filters_by_subset_scan(a)) {
    if (f.contains(a.bot())) continue;
    bool prime = true;
    for (Element x = 0; x < a.size() && prime; ++x)
      for (Element y = 0; y < a.size() && prime; ++y)
        if (f.contains(a.join(x, y)) && !f.contains(x) && !f.contains(y)) prime = false;
    if (prime) out.push_back(f);
  }
  return out;
}

std::vector<Subset> maxima_by_scan(const ResiduatedLattice& a) {
  std::vector<Subset> proper;
  for (Subset f : filters_by_subset_scan(a))
    if (!f.contains(a.bot())) proper.push_back(f);
  std::vector<Subset> out;
  for (Subset f : proper)
    if (std::none_of(proper.begin(), proper.end(), [&](Subset g) { return g != f && f.subset_of(g); }))
      out.push_back(f);
  return out;
}

Subset complemented(const ResiduatedLattice& a) {
  Subset out;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (a.join(x, y) == a.top() && a.meet(x, y) == a.bot()) out.insert(x);
  return out;
}

Subset idempotents(const ResiduatedLattice& a) {
  Subset out;
  for (Element x = 0; x < a.size(); ++x)
    if (a.odot(x, x) == x) out.insert(x);
  return out;
}

Subset regulars(const ResiduatedLattice& a) {
  Subset out;
  for (Element x = 0; x < a.size(); ++x)
    if (a.neg(a.neg(x)) == x) out.insert(x);
  return out;
}

std::vector<Subset> quotient_classes(const ResiduatedLattice& a, Subset f) {
  std::vector<Subset> out(a.size());
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (f.contains(a.imp(x, y)) && f.contains(a.imp(y, x))) out[x].insert(y);
  return out;
}

bool boolean_lifting_by_classes(const ResiduatedLattice& a, Subset f) {
  const auto cls = quotient_classes(a, f);
  const Subset bool_a = complemented(a);
  for (Element x = 0; x < a.size(); ++x) {
    bool complemented_class = false;
    for (Element y = 0; y < a.size() && !complemented_class; ++y)
      complemented_class = cls[a.join(x, y)] == cls[a.top()] && cls[a.meet(x, y)] == cls[a.bot()];
    if (complemented_class && !cls[x].intersects(bool_a)) return false;
  }
  return true;
}

bool isomorphic_by_permutations(const ResiduatedLattice& a, const ResiduatedLattice& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      for (Element y = 0; y < n && ok; ++y)
        ok = a.leq(x, y) == b.leq(p[x], p[y]) && p[a.odot(x, y)] == b.odot(p[x], p[y]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::size_t count_algebras_slowly(std::size_t n) {
  if (n == 1) return 1;
  const Element top = static_cast<Element>(n - 1);
  std::vector<std::pair<Element, Element>> strict;
  for (Element x = 1; x < top; ++x)
    for (Element y = 1; y < top; ++y)
      if (x != y) strict.emplace_back(x, y);
  std::vector<ResiduatedLattice> found;
  for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << strict.size()); ++rel) {
    std::vector<std::uint8_t> leq(n * n, 0);
    for (Element x = 0; x < n; ++x) leq[x * n + x] = leq[0 * n + x] = leq[x * n + top] = 1;
    for (std::size_t i = 0; i < strict.size(); ++i)
      if ((rel >> i) & 1U) leq[strict[i].first * n + strict[i].second] = 1;
    bool order = true;
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) {
          if (x != y && leq[x * n + y] && leq[y * n + x]) order = false;
          if (leq[x * n + y] && leq[y * n + z] && !leq[x * n + z]) order = false;
        }
    if (!order) continue;
    bool lattice = true;
    for (Element x = 0; x < n && lattice; ++x)
      for (Element y = 0; y < n && lattice; ++y) {
        std::size_t least_upper = 0, greatest_lower = 0;
        for (Element z = 0; z < n; ++z) {
          bool up = leq[x * n + z] && leq[y * n + z], down = leq[z * n + x] && leq[z * n + y];
          for (Element w = 0; w < n; ++w) {
            if (leq[x * n + w] && leq[y * n + w] && !leq[z * n + w]) up = false;
            if (leq[w * n + x] && leq[w * n + y] && !leq[w * n + z]) down = false;
          }
          least_upper += up;
          greatest_lower += down;
        }
        lattice = least_upper == 1 && greatest_lower == 1;
      }
    if (!lattice) continue;

    std::vector<std::pair<Element, Element>> cells;
    for (Element x = 0; x < top; ++x)
      for (Element y = x; y < top; ++y) cells.emplace_back(x, y);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells.size(); ++i) total *= n;
    for (std::uint64_t code = 0; code < total; ++code) {
      rlx::Table t(n * n);
      std::uint64_t c = code;
      for (auto [x, y] : cells) {
        t[x * n + y] = t[y * n + x] = static_cast<Element>(c % n);
        c /= n;
      }
      for (Element x = 0; x < n; ++x) t[x * n + top] = t[top * n + x] = x;
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x)
        for (Element y = 0; y < n && ok; ++y)
          for (Element z = 0; z < n && ok; ++z) ok = t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]];
      // residuation: {a : a*b <= c} is a principal down-set
      for (Element b = 0; b < n && ok; ++b)
        for (Element c2 = 0; c2 < n && ok; ++c2) {
          bool has_max = false;
          for (Element m = 0; m < n && !has_max; ++m) {
            bool is_max = true;
            for (Element x = 0; x < n && is_max; ++x)
              is_max = (leq[t[x * n + b] * n + c2] != 0) == (leq[x * n + m] != 0);
            has_max = is_max;
          }
          ok = has_max;
        }
      if (!ok) continue;
      rlx::RawAlgebra raw;
      for (Element x = 0; x < n; ++x) raw.labels.push_back("e" + std::to_string(x));
      raw.leq = leq;
      raw.odot = t;
      raw.bot = 0;
      raw.top = top;
      ResiduatedLattice a = rlx::validate(raw);
      if (std::none_of(found.begin(), found.end(),
                       [&](const ResiduatedLattice& b) { return isomorphic_by_permutations(a, b); }))
        found.push_back(a);
    }
  }
  return found.size();
}

Subset lattice_radical_by_definition(const rlx::BDLattice& l) {
  Subset out;
  for (Element x = 0; x < l.size(); ++x) {
    bool dense = true;
    for (Element y = 0; y < l.size(); ++y)
      if (l.meet(x, y) == l.bot() && y != l.bot()) dense = false;
    if (dense) out.insert(x);
  }
  return out;
}

}  // namespace oracle

#include "rlx/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rlx/canonical.hpp"

namespace rlx {

namespace {

constexpr Element kUnset = ~Element{0};

void check_size(std::size_t n, std::size_t cap) {
  if (n < 1 || n > cap)
    throw SizeCapExceeded("enumeration size must be between 1 and " + std::to_string(cap) + ", got " +
                          std::to_string(n));
}

std::optional<Element> least_upper_bound(std::size_t n, const std::vector<std::uint8_t>& leq, Element x, Element y) {
  for (Element z = 0; z < n; ++z) {
    if (!leq[x * n + z] || !leq[y * n + z]) continue;
    bool least = true;
    for (Element w = 0; w < n && least; ++w)
      if (leq[x * n + w] && leq[y * n + w] && !leq[z * n + w]) least = false;
    if (least) return z;
  }
  return std::nullopt;
}

bool is_lattice_order(std::size_t n, const std::vector<std::uint8_t>& leq) {
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (!least_upper_bound(n, leq, x, y)) return false;
  // Finite bounded posets with all joins also have all meets.
  return true;
}

// Naturally labelled posets on the middle points 1..n-2, built column by
// column: the strict predecessors of each new point form a down-set of the
// points placed so far.
void posets(std::size_t n, std::size_t j, std::vector<std::uint8_t>& leq,
            const std::function<void(const std::vector<std::uint8_t>&)>& emit) {
  if (j + 1 >= n) {
    emit(leq);
    return;
  }
  const std::size_t placed = j - 1;  // points 1..j-1
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << placed); ++mask) {
    bool down_closed = true;
    for (std::size_t i = 1; i < j && down_closed; ++i) {
      if (!((mask >> (i - 1)) & 1U)) continue;
      for (std::size_t h = 1; h < i && down_closed; ++h)
        if (leq[h * n + i] && !((mask >> (h - 1)) & 1U)) down_closed = false;
    }
    if (!down_closed) continue;
    for (std::size_t i = 1; i < j; ++i) leq[i * n + j] = (mask >> (i - 1)) & 1U;
    posets(n, j + 1, leq, emit);
  }
  for (std::size_t i = 1; i < j; ++i) leq[i * n + j] = 0;
}

struct ProductSearch {
  std::size_t n;
  const std::vector<std::uint8_t>& leq;
  Table join, meet;
  std::vector<std::vector<Element>> lower_covers;
  std::vector<std::pair<Element, Element>> cells;
  Table t;
  std::vector<Table> found;

  ProductSearch(std::size_t size, const std::vector<std::uint8_t>& order) : n(size), leq(order) {
    join.resize(n * n);
    meet.resize(n * n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) join[x * n + y] = *least_upper_bound(n, leq, x, y);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        Element best = 0;
        for (Element z = 0; z < n; ++z)
          if (leq[z * n + x] && leq[z * n + y] && leq[best * n + z]) best = z;
        meet[x * n + y] = best;
      }
    lower_covers.resize(n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        if (x == y || !leq[y * n + x]) continue;
        bool cover = true;
        for (Element z = 0; z < n && cover; ++z)
          if (z != x && z != y && leq[y * n + z] && leq[z * n + x]) cover = false;
        if (cover) lower_covers[x].push_back(y);
      }
    const Element top = static_cast<Element>(n - 1);
    t.assign(n * n, kUnset);
    for (Element x = 0; x < n; ++x) {
      set(0, x, 0);
      set(x, top, x);
    }
    for (Element x = 1; x < top; ++x)
      for (Element y = x; y < top; ++y) cells.emplace_back(x, y);
  }

  Element get(Element x, Element y) const { return t[x * n + y]; }
  void set(Element x, Element y, Element v) { t[x * n + y] = t[y * n + x] = v; }

  std::optional<Element> along_covers(Element x, Element y, bool first) const {
    const auto& covers = lower_covers[first ? x : y];
    if (covers.size() < 2) return std::nullopt;
    Element v = 0;
    for (Element l : covers) v = join[v * n + (first ? get(l, y) : get(x, l))];
    return v;
  }

  bool monotone_below(Element x, Element y, Element v) const {
    for (Element l : lower_covers[x])
      if (!leq[get(l, y) * n + v]) return false;
    for (Element l : lower_covers[y])
      if (!leq[get(x, l) * n + v]) return false;
    return true;
  }

  bool associative_around(Element x, Element y, Element v) const {
    for (Element z = 0; z < n; ++z) {
      for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
        const Element qz = get(q, z), vz = get(v, z);
        if (qz == kUnset || vz == kUnset) continue;
        const Element r = get(p, qz);
        if (r != kUnset && r != vz) return false;
      }
    }
    return true;
  }

  bool complete_checks() const {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) {
          if (get(a, join[b * n + c]) != join[get(a, b) * n + get(a, c)]) return false;
          if (get(get(a, b), c) != get(a, get(b, c))) return false;
        }
    return true;
  }

  void run(std::size_t k) {
    if (k == cells.size()) {
      if (complete_checks()) found.push_back(t);
      return;
    }
    const auto [x, y] = cells[k];
    const auto fx = along_covers(x, y, true), fy = along_covers(x, y, false);
    if (fx && fy && *fx != *fy) return;
    const std::optional<Element> forced = fx ? fx : fy;
    const Element cap = meet[x * n + y];
    for (Element v = 0; v < n; ++v) {
      if (forced && v != *forced) continue;
      if (!leq[v * n + cap] || !monotone_below(x, y, v)) continue;
      set(x, y, v);
      if (associative_around(x, y, v)) run(k + 1);
    }
    set(x, y, kUnset);
  }
};

using Keyed = std::map<std::vector<std::uint32_t>, ResiduatedLattice>;

void collect(std::size_t n, const std::vector<std::uint8_t>& leq, Keyed& out) {
  for (Table& odot : residuated_products(n, leq)) {
    RawAlgebra raw;
    raw.labels = standard_labels(n);
    raw.leq = leq;
    raw.odot = std::move(odot);
    raw.bot = 0;
    raw.top = static_cast<Element>(n - 1);
    ResiduatedLattice a = validate(raw);
    std::vector<std::uint32_t> code = canonical_form(a).code;
    if (!out.count(code)) out.emplace(std::move(code), canonicalize(a));
  }
}

std::vector<ResiduatedLattice> flatten(Keyed& merged) {
  std::vector<ResiduatedLattice> r;
  r.reserve(merged.size());
  for (auto& [code, a] : merged) r.push_back(std::move(a));
  return r;
}

}  // namespace

std::vector<std::vector<std::uint8_t>> enumerate_lattice_orders(std::size_t n) {
  check_size(n, kMaxLatticeEnumerationSize);
  std::map<std::vector<std::uint32_t>, std::vector<std::uint8_t>> seen;
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    leq[i * n + i] = 1;
    leq[0 * n + i] = 1;
    leq[i * n + (n - 1)] = 1;
  }
  posets(n, 2, leq, [&](const std::vector<std::uint8_t>& order) {
    if (!is_lattice_order(n, order)) return;
    // Relabel so that the stored order is canonical and still natural.
    const CanonicalForm c = canonical_order(n, order, 0, static_cast<Element>(n - 1));
    if (seen.count(c.code)) return;
    std::vector<std::uint8_t> canon(n * n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) canon[c.perm[x] * n + c.perm[y]] = order[x * n + y];
    seen.emplace(c.code, std::move(canon));
  });
  std::vector<std::vector<std::uint8_t>> out;
  for (auto& [code, order] : seen) {
    // Canonical relabelling need not be natural; re-sort by height so that
    // the product search can rely on a linear extension.
    std::vector<Element> ids(n);
    for (Element x = 0; x < n; ++x) ids[x] = x;
    std::vector<std::size_t> below(n, 0);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) below[x] += order[y * n + x];
    std::stable_sort(ids.begin(), ids.end(), [&](Element p, Element q) { return below[p] < below[q]; });
    std::vector<Element> pos(n);
    for (Element i = 0; i < n; ++i) pos[ids[i]] = i;
    std::vector<std::uint8_t> natural(n * n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) natural[pos[x] * n + pos[y]] = order[x * n + y];
    out.push_back(std::move(natural));
  }
  return out;
}

std::vector<Table> residuated_products(std::size_t n, const std::vector<std::uint8_t>& leq) {
  if (n == 1) return {Table{0}};
  ProductSearch s(n, leq);
  s.run(0);
  return std::move(s.found);
}

std::vector<ResiduatedLattice> enumerate_algebras_serial(std::size_t n) {
  check_size(n, kMaxEnumerationSize);
  Keyed merged;
  for (const auto& leq : enumerate_lattice_orders(n)) collect(n, leq, merged);
  return flatten(merged);
}

std::vector<ResiduatedLattice> enumerate_algebras(std::size_t n) {
  check_size(n, kMaxEnumerationSize);
  const auto orders = enumerate_lattice_orders(n);
  std::vector<Keyed> parts(orders.size());
  const auto count = static_cast<std::ptrdiff_t>(orders.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    collect(n, orders[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(i)]);
  Keyed merged;
  for (Keyed& p : parts) merged.merge(p);
  return flatten(merged);
}

std::size_t enumerate_algebras(std::size_t n, const std::function<void(const ResiduatedLattice&)>& emit) {
  const std::vector<ResiduatedLattice> all = enumerate_algebras(n);
  for (const ResiduatedLattice& a : all) emit(a);
  return all.size();
}

std::vector<BDLattice> enumerate_bdl(std::size_t n) {
  check_size(n, kMaxLatticeEnumerationSize);
  std::vector<BDLattice> out;
  for (const auto& leq : enumerate_lattice_orders(n)) {
    RawLattice raw;
    raw.labels = standard_labels(n);
    raw.leq = leq;
    raw.bot = 0;
    raw.top = static_cast<Element>(n - 1);
    try {
      out.push_back(canonicalize(validate_bdl(raw)));
    } catch (const NotDistributive&) {
    }
  }
  return out;
}

}  // namespace rlx

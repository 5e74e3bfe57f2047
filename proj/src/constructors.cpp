#include "rlx/constructors.hpp"

#include <algorithm>
#include <string>

namespace rlx {

namespace {

std::string chain_label(std::size_t i, std::size_t n) {
  if (i == 0) return "0";
  if (i + 1 == n) return "1";
  return std::to_string(i) + "/" + std::to_string(n - 1);
}

std::vector<std::uint8_t> chain_order(std::size_t n) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) leq[i * n + j] = 1;
  return leq;
}

}  // namespace

ResiduatedLattice boolean_algebra(std::size_t atoms) {
  if (atoms > 6) throw InvalidArgument("boolean_algebra supports at most 6 atoms");
  const std::size_t n = std::size_t{1} << atoms;
  const Element full = static_cast<Element>(n - 1);
  RawAlgebra raw;
  raw.labels.resize(n);
  for (Element m = 0; m < n; ++m) {
    if (m == full) {
      raw.labels[m] = "1";
    } else if (m == 0) {
      raw.labels[m] = "0";
    } else {
      for (std::size_t i = 0; i < atoms; ++i)
        if (m >> i & 1U) raw.labels[m] += static_cast<char>('a' + i);
    }
  }
  raw.leq.assign(n * n, 0);
  raw.odot.resize(n * n);
  raw.imp = Table(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      raw.leq[x * n + y] = (x & ~y) == 0;
      raw.odot[x * n + y] = x & y;
      (*raw.imp)[x * n + y] = (~x & full) | y;
    }
  raw.bot = 0;
  raw.top = full;
  return validate(raw);
}

ResiduatedLattice godel_chain(std::size_t n) {
  if (n < 1 || n > kMaxCarrier) throw InvalidArgument("godel_chain needs 1 <= n <= 64");
  RawAlgebra raw;
  for (std::size_t i = 0; i < n; ++i) raw.labels.push_back(chain_label(i, n));
  if (n == 1) raw.labels[0] = "1";
  raw.leq = chain_order(n);
  raw.odot.resize(n * n);
  raw.imp = Table(n * n);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) {
      raw.odot[i * n + j] = std::min(i, j);
      (*raw.imp)[i * n + j] = i <= j ? static_cast<Element>(n - 1) : j;
    }
  raw.bot = 0;
  raw.top = static_cast<Element>(n - 1);
  return validate(raw);
}

ResiduatedLattice lukasiewicz_chain(std::size_t n) {
  if (n < 2 || n > kMaxCarrier) throw InvalidArgument("lukasiewicz_chain needs 2 <= n <= 64");
  const long m = static_cast<long>(n) - 1;
  RawAlgebra raw;
  for (std::size_t i = 0; i < n; ++i) raw.labels.push_back(chain_label(i, n));
  raw.leq = chain_order(n);
  raw.odot.resize(n * n);
  raw.imp = Table(n * n);
  for (long i = 0; i <= m; ++i)
    for (long j = 0; j <= m; ++j) {
      raw.odot[i * n + j] = static_cast<Element>(std::max(0L, i + j - m));
      (*raw.imp)[i * n + j] = static_cast<Element>(std::min(m, m - i + j));
    }
  raw.bot = 0;
  raw.top = static_cast<Element>(m);
  return validate(raw);
}

ResiduatedLattice direct_product(const ResiduatedLattice& a, const ResiduatedLattice& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  if (n > kMaxCarrier) throw InvalidArgument("product exceeds 64 elements");
  auto id = [nb](Element x, Element y) { return static_cast<Element>(x * nb + y); };
  RawAlgebra raw;
  raw.labels.resize(n);
  raw.leq.assign(n * n, 0);
  raw.odot.resize(n * n);
  raw.imp = Table(n * n);
  for (Element x = 0; x < na; ++x)
    for (Element y = 0; y < nb; ++y) raw.labels[id(x, y)] = "(" + a.label(x) + "." + b.label(y) + ")";
  for (Element x1 = 0; x1 < na; ++x1)
    for (Element y1 = 0; y1 < nb; ++y1)
      for (Element x2 = 0; x2 < na; ++x2)
        for (Element y2 = 0; y2 < nb; ++y2) {
          const std::size_t k = id(x1, y1) * n + id(x2, y2);
          raw.leq[k] = a.leq(x1, x2) && b.leq(y1, y2);
          raw.odot[k] = id(a.odot(x1, x2), b.odot(y1, y2));
          (*raw.imp)[k] = id(a.imp(x1, x2), b.imp(y1, y2));
        }
  raw.bot = id(a.bot(), b.bot());
  raw.top = id(a.top(), b.top());
  return validate(raw);
}

ResiduatedLattice ordinal_sum(const ResiduatedLattice& r, const ResiduatedLattice& c) {
  std::vector<Element> lower;
  for (Element x = 0; x < r.size(); ++x)
    if (x != r.top()) lower.push_back(x);
  const std::size_t nl = lower.size(), n = nl + c.size();
  if (n > kMaxCarrier) throw InvalidArgument("ordinal sum exceeds 64 elements");

  // Position of r's elements; r's top becomes c's bottom.
  std::vector<Element> from_r(r.size());
  for (std::size_t i = 0; i < nl; ++i) from_r[lower[i]] = static_cast<Element>(i);
  from_r[r.top()] = static_cast<Element>(nl + c.bot());
  auto in_r = [nl](Element x) { return x < nl; };
  auto to_c = [nl](Element x) { return static_cast<Element>(x - nl); };
  auto from_c = [nl](Element x) { return static_cast<Element>(x + nl); };

  RawAlgebra raw;
  for (Element x : lower) raw.labels.push_back(x == r.bot() ? "0" : "r" + r.label(x));
  for (Element y = 0; y < c.size(); ++y) raw.labels.push_back(y == c.top() ? "1" : "c" + c.label(y));
  raw.leq.assign(n * n, 0);
  raw.odot.resize(n * n);
  raw.imp = Table(n * n);
  const Element top = from_c(c.top());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const std::size_t k = x * n + y;
      if (in_r(x) && in_r(y)) {
        raw.leq[k] = r.leq(lower[x], lower[y]);
        raw.odot[k] = from_r[r.odot(lower[x], lower[y])];
        (*raw.imp)[k] = raw.leq[k] ? top : from_r[r.imp(lower[x], lower[y])];
      } else if (in_r(x)) {
        raw.leq[k] = 1;
        raw.odot[k] = x;
        (*raw.imp)[k] = top;
      } else if (in_r(y)) {
        raw.leq[k] = 0;
        raw.odot[k] = y;
        (*raw.imp)[k] = y;
      } else {
        raw.leq[k] = c.leq(to_c(x), to_c(y));
        raw.odot[k] = from_c(c.odot(to_c(x), to_c(y)));
        (*raw.imp)[k] = from_c(c.imp(to_c(x), to_c(y)));
      }
    }
  raw.bot = nl > 0 ? from_r[r.bot()] : from_c(c.bot());
  raw.top = top;
  return validate(raw);
}

ResiduatedLattice upset_algebra(const ResiduatedLattice& a, Element e) {
  if (e >= a.size() || !is_boolean_element(a, e)) throw InvalidArgument("upset_algebra needs a Boolean element");
  const std::vector<Element> members = a.up_set(e).to_vector();
  const std::size_t n = members.size();
  std::vector<Element> pos(a.size(), 0);
  for (std::size_t i = 0; i < n; ++i) pos[members[i]] = static_cast<Element>(i);
  RawAlgebra raw;
  raw.leq.assign(n * n, 0);
  raw.odot.resize(n * n);
  raw.imp = Table(n * n);
  for (Element x : members) raw.labels.push_back(a.label(x));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element x = members[i], y = members[j];
      raw.leq[i * n + j] = a.leq(x, y);
      raw.odot[i * n + j] = pos[a.odot(x, y)];
      (*raw.imp)[i * n + j] = pos[a.join(e, a.imp(x, y))];
    }
  raw.bot = pos[e];
  raw.top = pos[a.top()];
  return validate(raw);
}

ResiduatedLattice relabel(const ResiduatedLattice& a, std::vector<std::string> labels) {
  RawAlgebra raw = a.raw();
  if (labels.size() != a.size()) throw InvalidArgument("relabel: wrong number of labels");
  raw.labels = std::move(labels);
  return validate(raw);
}

ResiduatedLattice permute(const ResiduatedLattice& a, const std::vector<Element>& perm) {
  const std::size_t n = a.size();
  if (perm.size() != n) throw InvalidArgument("permute: wrong permutation length");
  Subset seen;
  for (Element p : perm) {
    if (p >= n || seen.contains(p)) throw InvalidArgument("permute: not a permutation");
    seen.insert(p);
  }
  RawAlgebra raw;
  raw.labels.resize(n);
  raw.leq.assign(n * n, 0);
  raw.odot.resize(n * n);
  raw.imp = Table(n * n);
  for (Element x = 0; x < n; ++x) {
    raw.labels[perm[x]] = a.label(x);
    for (Element y = 0; y < n; ++y) {
      const std::size_t k = perm[x] * n + perm[y];
      raw.leq[k] = a.leq(x, y);
      raw.odot[k] = perm[a.odot(x, y)];
      (*raw.imp)[k] = perm[a.imp(x, y)];
    }
  }
  raw.bot = perm[a.bot()];
  raw.top = perm[a.top()];
  return validate(raw);
}

}  // namespace rlx

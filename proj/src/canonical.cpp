#include "rlx/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

#include "rlx/constructors.hpp"

namespace rlx {

namespace {

struct Structure {
  std::size_t n;
  std::function<bool(Element, Element)> leq;
  const Table* op;  // may be null
  Element bot, top;
};

using Cells = std::vector<std::vector<Element>>;

std::vector<Element> cell_index(const Cells& cells, std::size_t n) {
  std::vector<Element> idx(n);
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (Element x : cells[c]) idx[x] = static_cast<Element>(c);
  return idx;
}

// Splits cells by a signature built from the current cell indices until stable.
void refine(const Structure& s, Cells& cells) {
  const std::size_t n = s.n;
  while (true) {
    const std::vector<Element> idx = cell_index(cells, n);
    std::vector<std::vector<std::uint32_t>> sig(n);
    for (Element x = 0; x < n; ++x) {
      std::vector<std::uint32_t> pairs;
      pairs.reserve(n);
      for (Element y = 0; y < n; ++y) {
        std::uint32_t v = idx[y] * 4U + (s.leq(x, y) ? 1U : 0U) + (s.leq(y, x) ? 2U : 0U);
        if (s.op) v = v * 64U + idx[(*s.op)[x * n + y]];
        pairs.push_back(v);
      }
      std::sort(pairs.begin(), pairs.end());
      if (s.op) pairs.push_back(idx[(*s.op)[x * n + x]]);
      sig[x] = std::move(pairs);
    }
    Cells next;
    for (const auto& cell : cells) {
      std::vector<Element> sorted = cell;
      std::stable_sort(sorted.begin(), sorted.end(), [&](Element a, Element b) { return sig[a] < sig[b]; });
      std::vector<Element> part{sorted[0]};
      for (std::size_t k = 1; k < sorted.size(); ++k) {
        if (sig[sorted[k]] != sig[sorted[k - 1]]) {
          next.push_back(part);
          part.clear();
        }
        part.push_back(sorted[k]);
      }
      next.push_back(part);
    }
    if (next.size() == cells.size()) return;
    cells = std::move(next);
  }
}

std::vector<std::uint32_t> encode(const Structure& s, const std::vector<Element>& perm) {
  const std::size_t n = s.n;
  std::vector<Element> inv(n);
  for (Element x = 0; x < n; ++x) inv[perm[x]] = x;
  std::vector<std::uint32_t> code{static_cast<std::uint32_t>(n)};
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) code.push_back(s.leq(inv[i], inv[j]) ? 1U : 0U);
  if (s.op)
    for (Element i = 0; i < n; ++i)
      for (Element j = 0; j < n; ++j) code.push_back(perm[(*s.op)[inv[i] * n + inv[j]]]);
  return code;
}

void search(const Structure& s, Cells cells, CanonicalForm& best) {
  refine(s, cells);
  std::size_t target = cells.size();
  for (std::size_t c = 0; c < cells.size(); ++c)
    if (cells[c].size() > 1) {
      target = c;
      break;
    }
  if (target == cells.size()) {
    std::vector<Element> perm(s.n);
    for (std::size_t c = 0; c < cells.size(); ++c) perm[cells[c][0]] = static_cast<Element>(c);
    std::vector<std::uint32_t> code = encode(s, perm);
    if (best.code.empty() || code < best.code) {
      best.code = std::move(code);
      best.perm = std::move(perm);
    }
    return;
  }
  for (Element x : cells[target]) {
    Cells child;
    child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
    child.push_back({x});
    std::vector<Element> rest;
    for (Element y : cells[target])
      if (y != x) rest.push_back(y);
    child.push_back(rest);
    child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
    search(s, std::move(child), best);
  }
}

CanonicalForm canonical(const Structure& s) {
  Cells cells;
  if (s.n == 1) {
    cells.push_back({0});
  } else {
    std::vector<Element> middle;
    for (Element x = 0; x < s.n; ++x)
      if (x != s.bot && x != s.top) middle.push_back(x);
    cells.push_back({s.bot});
    if (!middle.empty()) cells.push_back(middle);
    cells.push_back({s.top});
  }
  CanonicalForm best;
  search(s, cells, best);
  return best;
}

}  // namespace

std::vector<std::string> standard_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0)
      labels[i] = n == 1 ? "1" : "0";
    else if (i + 1 == n)
      labels[i] = "1";
    else if (i <= 24)
      labels[i] = std::string(1, static_cast<char>('a' + i - 1));
    else
      labels[i] = "e" + std::to_string(i);
  }
  return labels;
}

CanonicalForm canonical_form(const ResiduatedLattice& a) {
  Structure s{a.size(), [&a](Element x, Element y) { return a.leq(x, y); }, &a.odot_table(), a.bot(), a.top()};
  return canonical(s);
}

CanonicalForm canonical_form(const BDLattice& l) {
  Structure s{l.size(), [&l](Element x, Element y) { return l.leq(x, y); }, nullptr, l.bot(), l.top()};
  return canonical(s);
}

CanonicalForm canonical_order(std::size_t n, const std::vector<std::uint8_t>& leq, Element bot, Element top) {
  Structure s{n, [&leq, n](Element x, Element y) { return leq[x * n + y] != 0; }, nullptr, bot, top};
  return canonical(s);
}

ResiduatedLattice canonicalize(const ResiduatedLattice& a) {
  return relabel(permute(a, canonical_form(a).perm), standard_labels(a.size()));
}

BDLattice canonicalize(const BDLattice& l) {
  RawLattice raw = permute(l, canonical_form(l).perm).raw();
  raw.labels = standard_labels(l.size());
  return validate_bdl(raw);
}

std::optional<std::vector<Element>> find_isomorphism(const ResiduatedLattice& a, const ResiduatedLattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  const CanonicalForm ca = canonical_form(a), cb = canonical_form(b);
  if (ca.code != cb.code) return std::nullopt;
  std::vector<Element> inv_b(b.size());
  for (Element y = 0; y < b.size(); ++y) inv_b[cb.perm[y]] = y;
  std::vector<Element> map(a.size());
  for (Element x = 0; x < a.size(); ++x) map[x] = inv_b[ca.perm[x]];
  return map;
}

bool isomorphic(const ResiduatedLattice& a, const ResiduatedLattice& b) {
  return a.size() == b.size() && canonical_form(a).code == canonical_form(b).code;
}

bool isomorphic(const BDLattice& a, const BDLattice& b) {
  return a.size() == b.size() && canonical_form(a).code == canonical_form(b).code;
}

std::string canonical_hash(const ResiduatedLattice& a) {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint32_t v : canonical_form(a).code)
    for (int k = 0; k < 4; ++k) {
      h ^= (v >> (8 * k)) & 0xFFU;
      h *= 1099511628211ULL;
    }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace rlx

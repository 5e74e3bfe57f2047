#include "rlx/algebra.hpp"

#include <algorithm>
#include <set>

namespace rlx {

namespace {

// lub/glb of a, b under leq; nullopt when it does not exist.
std::optional<Element> least_upper_bound(std::size_t n, const std::vector<std::uint8_t>& leq, Element a,
                                         Element b) {
  auto le = [&](Element x, Element y) { return leq[x * n + y] != 0; };
  for (Element c = 0; c < n; ++c) {
    if (!le(a, c) || !le(b, c)) continue;
    bool least = true;
    for (Element d = 0; d < n && least; ++d)
      if (le(a, d) && le(b, d) && !le(c, d)) least = false;
    if (least) return c;
  }
  return std::nullopt;
}

std::optional<Element> greatest_lower_bound(std::size_t n, const std::vector<std::uint8_t>& leq, Element a,
                                            Element b) {
  auto le = [&](Element x, Element y) { return leq[x * n + y] != 0; };
  for (Element c = 0; c < n; ++c) {
    if (!le(c, a) || !le(c, b)) continue;
    bool greatest = true;
    for (Element d = 0; d < n && greatest; ++d)
      if (le(d, a) && le(d, b) && !le(d, c)) greatest = false;
    if (greatest) return c;
  }
  return std::nullopt;
}

void check_table_shape(const Table& t, std::size_t n, const char* name) {
  if (t.size() != n * n)
    throw InvalidArgument(std::string(name) + " table has " + std::to_string(t.size()) + " entries, expected " +
                          std::to_string(n * n));
  for (Element v : t)
    if (v >= n) throw InvalidArgument(std::string(name) + " table entry out of range: " + std::to_string(v));
}

}  // namespace

std::optional<Element> ResiduatedLattice::find(std::string_view label) const {
  for (Element a = 0; a < n_; ++a)
    if (labels_[a] == label) return a;
  return std::nullopt;
}

Element ResiduatedLattice::power(Element a, std::size_t n) const {
  Element r = top_;
  for (std::size_t i = 0; i < n; ++i) r = odot(r, a);
  return r;
}

RawAlgebra ResiduatedLattice::raw() const {
  RawAlgebra r;
  r.labels = labels_;
  r.leq = leq_;
  r.join = join_;
  r.meet = meet_;
  r.odot = odot_;
  r.imp = imp_;
  r.bot = bot_;
  r.top = top_;
  return r;
}

bool ResiduatedLattice::operator==(const ResiduatedLattice& o) const {
  return n_ == o.n_ && labels_ == o.labels_ && leq_ == o.leq_ && odot_ == o.odot_ && imp_ == o.imp_ &&
         bot_ == o.bot_ && top_ == o.top_;
}

Table derive_implication(const RawAlgebra& raw) {
  const std::size_t n = raw.size();
  auto le = [&](Element x, Element y) { return raw.leq[x * n + y] != 0; };
  Table imp(n * n);
  for (Element b = 0; b < n; ++b) {
    for (Element c = 0; c < n; ++c) {
      std::optional<Element> best;
      for (Element a = 0; a < n; ++a) {
        if (!le(raw.odot[a * n + b], c)) continue;
        if (!best || le(*best, a)) best = a;
      }
      // `best` is only a maximal candidate; it must dominate every candidate.
      if (!best) throw NotResiduated(b, c);
      for (Element a = 0; a < n; ++a)
        if (le(raw.odot[a * n + b], c) && !le(a, *best)) throw NotResiduated(b, c);
      imp[b * n + c] = *best;
    }
  }
  return imp;
}

ResiduatedLattice validate(const RawAlgebra& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw InvalidArgument("empty carrier");
  if (n > kMaxCarrier) throw InvalidArgument("carrier larger than " + std::to_string(kMaxCarrier));
  if (raw.leq.size() != n * n) throw InvalidArgument("order matrix has wrong size");
  if (raw.bot >= n || raw.top >= n) throw InvalidArgument("bottom/top id out of range");
  check_table_shape(raw.odot, n, "odot");
  if (raw.join) check_table_shape(*raw.join, n, "join");
  if (raw.meet) check_table_shape(*raw.meet, n, "meet");
  if (raw.imp) check_table_shape(*raw.imp, n, "imp");
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

  ResiduatedLattice r;
  r.n_ = n;
  r.labels_ = raw.labels;
  r.leq_ = raw.leq;
  r.bot_ = raw.bot;
  r.top_ = raw.top;
  r.join_.resize(n * n);
  r.meet_.resize(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      auto j = least_upper_bound(n, raw.leq, a, b);
      if (!j) throw AxiomViolation("join-exists", {a, b});
      auto m = greatest_lower_bound(n, raw.leq, a, b);
      if (!m) throw AxiomViolation("meet-exists", {a, b});
      r.join_[a * n + b] = *j;
      r.meet_[a * n + b] = *m;
      if (raw.join && (*raw.join)[a * n + b] != *j) throw AxiomViolation("join-table", {a, b});
      if (raw.meet && (*raw.meet)[a * n + b] != *m) throw AxiomViolation("meet-table", {a, b});
    }
  }

  const Table& o = raw.odot;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (o[a * n + b] != o[b * n + a]) throw AxiomViolation("commutativity", {a, b});
  for (Element a = 0; a < n; ++a)
    if (o[a * n + raw.top] != a) throw AxiomViolation("identity", {a});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (o[o[a * n + b] * n + c] != o[a * n + o[b * n + c]]) throw AxiomViolation("associativity", {a, b, c});
  r.odot_ = o;

  r.imp_ = raw.imp ? *raw.imp : derive_implication(raw);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (le(o[a * n + b], c) != le(a, r.imp_[b * n + c])) throw AxiomViolation("residuation", {a, b, c});

  r.up_.resize(n);
  r.down_.resize(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (le(a, b)) {
        r.up_[a].insert(b);
        r.down_[b].insert(a);
      }
  r.stable_power_.resize(n);
  for (Element a = 0; a < n; ++a) {
    Element p = a;
    while (r.odot(p, p) != p) p = r.odot(p, a);
    r.stable_power_[a] = p;
  }
  return r;
}

bool is_boolean_element(const ResiduatedLattice& a, Element x) {
  return a.join(x, a.neg(x)) == a.top() && a.meet(x, a.neg(x)) == a.bot();
}

bool is_chain(const ResiduatedLattice& a) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (!a.leq(x, y) && !a.leq(y, x)) return false;
  return true;
}

bool is_distributive(const ResiduatedLattice& a) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      for (Element z = 0; z < a.size(); ++z)
        if (a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z))) return false;
  return true;
}

bool is_nilpotent(const ResiduatedLattice& a, Element x) { return a.idempotent_power(x) == a.bot(); }

bool is_archimedean(const ResiduatedLattice& a, Element x) {
  // Powers decrease and become stationary within size() steps.
  Element p = x;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    if (is_boolean_element(a, p)) return true;
    p = a.odot(p, x);
  }
  return false;
}

std::optional<Element> lattice_complement(const ResiduatedLattice& a, Element x) {
  for (Element y = 0; y < a.size(); ++y)
    if (a.join(x, y) == a.top() && a.meet(x, y) == a.bot()) return y;
  return std::nullopt;
}

ElementClassReport classify(const ResiduatedLattice& a) {
  ElementClassReport r;
  for (Element x = 0; x < a.size(); ++x) {
    if (is_boolean_element(a, x)) r.boolean_center.insert(x);
    if (a.odot(x, x) == x) r.idempotents.insert(x);
    if (a.neg(a.neg(x)) == x) r.regulars.insert(x);
    if (is_nilpotent(a, x)) r.nilpotents.insert(x);
    if (is_archimedean(a, x)) r.archimedeans.insert(x);
  }
  const Subset all = a.carrier();
  r.is_godel = r.idempotents == all;
  r.is_involutive = r.regulars == all;
  r.is_hyperarchimedean = r.archimedeans == all;
  r.is_chain = is_chain(a);
  r.is_distributive = is_distributive(a);
  return r;
}

std::vector<std::uint8_t> order_closure(std::size_t n, const std::vector<std::pair<Element, Element>>& pairs) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (Element a = 0; a < n; ++a) leq[a * n + a] = 1;
  for (auto [x, y] : pairs) leq[x * n + y] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;
  return leq;
}

std::vector<std::pair<Element, Element>> covering_pairs(std::size_t n, const std::vector<std::uint8_t>& leq) {
  std::vector<std::pair<Element, Element>> out;
  auto lt = [&](Element x, Element y) { return x != y && leq[x * n + y]; };
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!lt(x, y)) continue;
      bool covers = true;
      for (Element z = 0; z < n && covers; ++z)
        if (lt(x, z) && lt(z, y)) covers = false;
      if (covers) out.emplace_back(x, y);
    }
  return out;
}

}  // namespace rlx

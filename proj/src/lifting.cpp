#include "rlx/lifting.hpp"

#include <stdexcept>

#include "rlx/constructors.hpp"

namespace rlx {

namespace {

LpEvidence check_filter(const ResiduatedLattice& a, const Formula& phi, Subset definable, const Filter& f) {
  const Quotient q = quotient(a, f);
  const Subset wanted = definable_set(q.quotient, phi);
  const Subset lifted = q.image(definable);
  LpEvidence ev;
  const Subset missing = wanted - lifted;
  if (!missing.empty()) {
    ev.counterexample = q.preimage(missing).first();
    return ev;
  }
  ev.holds = true;
  for (Element c : wanted) {
    const Element rep = q.section[c];
    if (definable.contains(rep)) continue;
    ev.witness = (q.preimage(Subset::single(c)) & definable).first();
    break;
  }
  return ev;
}

LpReport finish(const Formula& phi, std::vector<LpFilterEntry> entries) {
  LpReport r{phi, std::move(entries), true};
  for (const LpFilterEntry& e : r.per_filter) r.global = r.global && e.evidence.holds;
  return r;
}

}  // namespace

LpEvidence has_phi_lp(const ResiduatedLattice& a, const Formula& phi, const Filter& f) {
  return check_filter(a, phi, definable_set(a, phi), f);
}

LpReport lp_report_serial(const ResiduatedLattice& a, const Formula& phi) {
  const Subset definable = definable_set(a, phi);
  std::vector<LpFilterEntry> entries;
  for (const Filter& f : all_filters(a)) entries.push_back({f, check_filter(a, phi, definable, f)});
  return finish(phi, std::move(entries));
}

LpReport lp_report(const ResiduatedLattice& a, const Formula& phi) {
  const Subset definable = definable_set(a, phi);
  const std::vector<Filter> filters = all_filters(a);
  std::vector<LpFilterEntry> entries(filters.size());
  const auto count = static_cast<std::ptrdiff_t>(filters.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const Filter& f = filters[static_cast<std::size_t>(i)];
    entries[static_cast<std::size_t>(i)] = {f, check_filter(a, phi, definable, f)};
  }
  return finish(phi, std::move(entries));
}

bool has_blp(const ResiduatedLattice& a) { return lp_report(a, blp_formula()).global; }
bool has_ilp(const ResiduatedLattice& a) { return lp_report(a, ilp_formula()).global; }

bool has_rlp(const ResiduatedLattice& a) {
  const LpReport r = lp_report(a, rlp_formula());
  const Subset regular = definable_set(a, rlp_formula());
  for (const LpFilterEntry& entry : r.per_filter) {
    const Quotient q = quotient(a, entry.filter);
    const Subset wanted = definable_set(q.quotient, rlp_formula());
    for (Element x = 0; x < a.size(); ++x) {
      if (!wanted.contains(q.class_of[x])) continue;
      const Element e = a.neg(a.neg(x));
      if (!regular.contains(e) || q.class_of[e] != q.class_of[x])
        throw std::logic_error("double negation does not lift a regular class");
    }
  }
  if (!r.global) throw std::logic_error("regular lifting property failed");
  return true;
}

bool atomic_lp_characterization(const ResiduatedLattice& a, const Formula& phi) {
  if (!phi.is_atomic()) throw NotAtomic("formula is not a single equation without witnesses");
  const Subset definable = definable_set(a, phi);
  const std::vector<Element> none;
  const auto [lhs, rhs] = phi.equations.front();
  for (Element x = 0; x < a.size(); ++x) {
    const Element t = a.biresiduum(eval_term(a, phi, lhs, x, none), eval_term(a, phi, rhs, x, none));
    const Filter f = principal_filter(a, t);
    bool found = false;
    for (Element e : definable)
      if (f.contains(a.biresiduum(x, e))) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool blp_by_excluded_middle_filter(const ResiduatedLattice& a) {
  const Subset boolean = classify(a).boolean_center;
  for (Element x = 0; x < a.size(); ++x) {
    const Filter f = principal_filter(a, a.join(x, a.neg(x)));
    bool found = false;
    for (Element e : boolean) found = found || f.contains(a.biresiduum(x, e));
    if (!found) return false;
  }
  return true;
}

bool ilp_by_square_distance(const ResiduatedLattice& a) {
  const Subset idem = classify(a).idempotents;
  for (Element x = 0; x < a.size(); ++x) {
    const Filter f = principal_filter(a, a.biresiduum(x, a.odot(x, x)));
    bool found = false;
    for (Element e : idem) found = found || f.contains(a.biresiduum(x, e));
    if (!found) return false;
  }
  return true;
}

namespace {

struct TupleSearch {
  const ResiduatedLattice& a;
  std::vector<Element> boolean;
  std::vector<Element> xs;
  std::vector<Element> es;

  bool assign(std::size_t i, Element meet_so_far) {
    if (i == xs.size()) return meet_so_far == a.bot();
    const Subset up = principal_filter(a, xs[i]).members;
    for (Element e : boolean) {
      if (!up.contains(e)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = a.join(es[j], e) == a.top();
      if (!ok) continue;
      es[i] = e;
      if (assign(i + 1, a.meet(meet_so_far, e))) return true;
    }
    return false;
  }

  // Enumerates non-decreasing tuples of length n with product 0; returns the
  // first one without Boolean splitting, or empty.
  bool scan(std::size_t n, std::vector<Element>& failing) {
    xs.assign(n, 0);
    es.assign(n, 0);
    const Element size = static_cast<Element>(a.size());
    while (true) {
      Element prod = a.top();
      for (Element x : xs) prod = a.odot(prod, x);
      if (prod == a.bot() && !assign(0, a.top())) {
        failing = xs;
        return false;
      }
      std::size_t k = n;
      while (k > 0 && xs[k - 1] + 1 == size) --k;
      if (k == 0) return true;
      const Element next = xs[k - 1] + 1;
      for (std::size_t j = k - 1; j < n; ++j) xs[j] = next;
    }
  }
};

}  // namespace

PropBlpConditions propblp_conditions(const ResiduatedLattice& a, std::size_t max_arity) {
  PropBlpConditions c;
  c.max_arity = max_arity;
  c.lifting = has_blp(a);
  const Subset boolean = classify(a).boolean_center;

  c.principal_split = true;
  for (Element x = 0; x < a.size() && c.principal_split; ++x) {
    const Subset fx = principal_filter(a, x).members, fnx = principal_filter(a, a.neg(x)).members;
    bool found = false;
    for (Element e : boolean) found = found || (fx.contains(e) && fnx.contains(a.neg(e)));
    if (!found) {
      c.principal_split = false;
      c.principal_split_witness = x;
    }
  }

  c.zero_product = true;
  for (Element x = 0; x < a.size() && c.zero_product; ++x)
    for (Element y = 0; y < a.size() && c.zero_product; ++y) {
      if (a.odot(x, y) != a.bot()) continue;
      const Subset fx = principal_filter(a, x).members, fy = principal_filter(a, y).members;
      bool found = false;
      for (Element e : boolean) found = found || (fx.contains(e) && fy.contains(a.neg(e)));
      if (!found) {
        c.zero_product = false;
        c.zero_product_witness = std::pair{x, y};
      }
    }

  TupleSearch search{a, boolean.to_vector(), {}, {}};
  c.tuple_split = true;
  for (std::size_t n = 2; n <= max_arity && c.tuple_split; ++n)
    c.tuple_split = search.scan(n, c.tuple_split_witness);
  return c;
}

ProductLpCheck product_lp_check(const ResiduatedLattice& a, const ResiduatedLattice& b, const Formula& phi) {
  const ResiduatedLattice p = direct_product(a, b);
  ProductLpCheck r;
  r.left = lp_report(a, phi).global;
  r.right = lp_report(b, phi).global;
  r.product = lp_report(p, phi).global;
  const Subset da = definable_set(a, phi), db = definable_set(b, phi);
  Subset expected;
  for (Element x : da)
    for (Element y : db) expected.insert(static_cast<Element>(x * b.size() + y));
  r.definable_sets_agree = expected == definable_set(p, phi);
  return r;
}

}  // namespace rlx

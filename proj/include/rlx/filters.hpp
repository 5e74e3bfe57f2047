#pragma once

#include <cstddef>
#include <vector>

#include "rlx/algebra.hpp"

namespace rlx {

/// A filter of some residuated lattice, stored as its member set.
struct Filter {
  Subset members;

  bool contains(Element x) const { return members.contains(x); }
  std::size_t size() const { return members.count(); }
  bool proper(const ResiduatedLattice& a) const { return !members.contains(a.bot()); }
  bool operator==(const Filter&) const = default;
};

/// Filter order used everywhere: by size, then by bit mask.
bool filter_less(const Filter& f, const Filter& g);

bool is_filter(const ResiduatedLattice& a, Subset s);

/// [x) = {a : x^n <= a for some n} = up-set of the idempotent power of x.
Filter principal_filter(const ResiduatedLattice& a, Element x);
/// Least filter containing x; {top} for the empty set.
Filter generated_filter(const ResiduatedLattice& a, Subset x);

/// All filters in filter order, built from principal filters.
std::vector<Filter> all_filters(const ResiduatedLattice& a);
Filter filter_join(const ResiduatedLattice& a, const Filter& f, const Filter& g);
Filter filter_meet(const Filter& f, const Filter& g);

bool is_prime(const ResiduatedLattice& a, const Filter& f);
std::vector<Filter> spec(const ResiduatedLattice& a);
std::vector<Filter> max_spec(const ResiduatedLattice& a);
/// Intersection of the maximal filters (the whole carrier when there are none).
Filter radical(const ResiduatedLattice& a);

bool is_local(const ResiduatedLattice& a);
/// Always true for finite algebras; `count` receives |Max(A)|.
bool is_semilocal(const ResiduatedLattice& a, std::size_t* count = nullptr);
bool is_semisimple(const ResiduatedLattice& a);

/// Least element of the filter. Throws NoMinimum.
Element min_generator(const ResiduatedLattice& a, const Filter& f);

/// A/F with classes numbered by least member; labels are those of the
/// least members.
struct Quotient {
  Filter filter;
  std::vector<Element> class_of;
  std::vector<Element> section;
  ResiduatedLattice quotient;

  Subset image(Subset s) const;
  Subset preimage(Subset classes) const;
};

Quotient quotient(const ResiduatedLattice& a, const Filter& f);

}  // namespace rlx

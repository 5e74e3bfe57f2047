#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rlx/subset.hpp"

namespace rlx {

/// A topology on the points {0, ..., n-1} given by its full family of opens.
class FiniteSpace {
 public:
  FiniteSpace() = default;
  /// The topology generated by `family` (closed under finite unions and
  /// intersections; the empty set and the whole space are always added).
  static FiniteSpace generated_by(std::size_t n_points, const std::vector<Subset>& family);

  std::size_t size() const { return n_; }
  Subset points() const { return Subset::full(n_); }
  /// Opens in increasing mask order.
  const std::vector<Subset>& opens() const { return opens_; }

  bool is_open(Subset s) const;
  bool is_closed(Subset s) const { return is_open(s.complement_in(n_)); }
  bool is_clopen(Subset s) const { return is_open(s) && is_closed(s); }
  Subset closure(Subset s) const;
  Subset interior(Subset s) const;
  std::vector<Subset> clopens() const;
  std::vector<Subset> closed_sets() const;
  /// Subspace topology on the points of `sub`, reindexed in increasing order.
  FiniteSpace subspace(Subset sub) const;

  bool operator==(const FiniteSpace&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Subset> opens_;
};

struct TopologyPredicates {
  bool t0 = false;
  bool t1 = false;
  bool hausdorff = false;
  bool compact = false;
  bool zero_dim = false;
  bool strongly_zero_dim = false;
  bool normal = false;
  bool boolean_space = false;
};

bool is_t0(const FiniteSpace& x);
bool is_t1(const FiniteSpace& x);
bool is_hausdorff(const FiniteSpace& x);
/// Every open set is a union of clopens.
bool is_zero_dimensional(const FiniteSpace& x);
/// For all opens U, V covering the space there is a clopen C with
/// C inside U and the complement of C inside V.
bool is_strongly_zero_dimensional(const FiniteSpace& x);
/// Disjoint closed sets have disjoint open neighbourhoods.
bool is_normal_space(const FiniteSpace& x);
bool is_basis(const FiniteSpace& x, const std::vector<Subset>& family);

TopologyPredicates topology_predicates(const FiniteSpace& x);

/// f maps points of x to points of y.
bool is_continuous(const std::vector<Element>& f, const FiniteSpace& x, const FiniteSpace& y);
bool is_homeomorphism(const std::vector<Element>& f, const FiniteSpace& x, const FiniteSpace& y);

/// A spectral space whose points are filters (element subsets), with the
/// basis sets it was generated from. basis_generator[i] is the element a
/// whose D(a) (or d(a)) is basis[i].
struct SpectrumSpace {
  std::vector<Subset> points;
  FiniteSpace space;
  std::vector<Subset> basis;
  std::vector<Element> basis_generator;

  /// Index of a point, if `filter` is one.
  std::optional<Element> index_of(Subset filter) const;
};

}  // namespace rlx

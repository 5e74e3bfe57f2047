#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rlx/algebra.hpp"
#include "rlx/topology.hpp"

namespace rlx {

struct RawLattice {
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq;
  std::optional<Table> join;
  std::optional<Table> meet;
  Element bot = 0;
  Element top = 0;

  std::size_t size() const { return labels.size(); }
};

/// A validated finite bounded distributive lattice. Immutable.
class BDLattice {
 public:
  std::size_t size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element a) const { return labels_[a]; }
  std::optional<Element> find(std::string_view label) const;

  Element bot() const { return bot_; }
  Element top() const { return top_; }
  bool leq(Element a, Element b) const { return leq_[a * n_ + b] != 0; }
  Element join(Element a, Element b) const { return join_[a * n_ + b]; }
  Element meet(Element a, Element b) const { return meet_[a * n_ + b]; }

  Subset carrier() const { return Subset::full(n_); }
  Subset up_set(Element a) const { return up_[a]; }
  Subset down_set(Element a) const { return down_[a]; }

  const std::vector<std::uint8_t>& leq_matrix() const { return leq_; }
  const Table& join_table() const { return join_; }
  const Table& meet_table() const { return meet_; }
  RawLattice raw() const;

  bool operator==(const BDLattice& o) const;

 private:
  friend BDLattice validate_bdl(const RawLattice& raw);

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  Table join_, meet_;
  Element bot_ = 0, top_ = 0;
  std::vector<Subset> up_, down_;
};

/// Checks order, bounds, lattice tables and distributivity exhaustively.
/// Throws AxiomViolation, NotDistributive or InvalidArgument.
BDLattice validate_bdl(const RawLattice& raw);

/// The lattice reduct of a residuated lattice. Throws NotDistributive.
BDLattice underlying_lattice(const ResiduatedLattice& a);

BDLattice permute(const BDLattice& l, const std::vector<Element>& perm);

bool is_boolean_element(const BDLattice& l, Element x);
Subset boolean_center(const BDLattice& l);
bool is_boolean_lattice(const BDLattice& l);

// Lattice filters: non-empty, up-closed, meet-closed. On a finite lattice
// every filter is principal.
bool is_lattice_filter(const BDLattice& l, Subset s);
Subset lattice_generated_filter(const BDLattice& l, Subset x);
/// Sorted by (size, mask).
std::vector<Subset> lattice_filters(const BDLattice& l);
std::vector<Subset> lattice_spec(const BDLattice& l);
std::vector<Subset> lattice_max_spec(const BDLattice& l);
/// {a : a ^ x = 0 implies x = 0}; checked against the intersection of the
/// maximal filters.
Subset lattice_radical(const BDLattice& l);
Subset lattice_radical_by_maximals(const BDLattice& l);

/// Opens D(F) = primes not containing F; basis D(a).
SpectrumSpace lattice_stone_spec(const BDLattice& l);
SpectrumSpace lattice_stone_max(const BDLattice& l);

struct LatticeQuotient {
  Subset filter;
  std::vector<Element> class_of;
  std::vector<Element> section;
  BDLattice quotient;
};

/// x ~ y iff x ^ a = y ^ a for some a in the filter.
LatticeQuotient lattice_quotient(const BDLattice& l, Subset filter);

struct LatticeLpEntry {
  Subset filter;
  bool holds = false;
  std::optional<Element> counterexample;
};

struct LatticeBlpReport {
  std::vector<LatticeLpEntry> per_filter;
  bool global = false;
};

/// Boolean lifting per lattice filter, Boolean elements found by evaluating
/// `exists w . v | w = 1 && v & w = 0`.
LatticeBlpReport lattice_blp(const BDLattice& l);
LatticeLpEntry lattice_filter_blp(const BDLattice& l, Subset filter);

struct SplitWitness {
  Element x = 0, y = 0;
};

/// x v y = 1 implies u ^ v = 0 and u v x = v v y = 1 for some u, v.
/// Returns the first failing pair, or nullopt when normal.
std::optional<SplitWitness> normal_lattice_failure(const BDLattice& l);
/// x ^ y = 0 implies u v v = 1 and u ^ x = v ^ y = 0 for some u, v.
std::optional<SplitWitness> conormal_lattice_failure(const BDLattice& l);
bool is_normal_lattice(const BDLattice& l);
bool is_conormal_lattice(const BDLattice& l);

/// Lattice BLP of the radical of a conormal lattice. Throws NotConormal.
bool radco_check(const BDLattice& l);

/// Every prime filter lies under exactly one maximal filter.
bool lattice_unique_maximal_over_primes(const BDLattice& l);

/// Lattice isomorphism l1 -> l2 by backtracking with height and degree
/// pruning. When `accept` is given, isomorphisms are enumerated until one is
/// accepted.
std::optional<std::vector<Element>> find_lattice_isomorphism(
    const BDLattice& l1, const BDLattice& l2,
    const std::function<bool(const std::vector<Element>&)>& accept = {});

}  // namespace rlx

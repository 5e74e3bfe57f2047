#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rlx/error.hpp"
#include "rlx/subset.hpp"

namespace rlx {

/// Row-major n x n operation table.
using Table = std::vector<Element>;

/// Unvalidated description of a finite residuated lattice.
///
/// `leq` is a row-major n x n 0/1 matrix. Join and meet tables are optional:
/// when absent they are computed from the order, when present they must match
/// it. The implication table is optional as well and is derived from the order
/// and the product when absent.
struct RawAlgebra {
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq;
  std::optional<Table> join;
  std::optional<Table> meet;
  Table odot;
  std::optional<Table> imp;
  Element bot = 0;
  Element top = 0;

  std::size_t size() const { return labels.size(); }
};

/// A validated finite (commutative, integral, bounded) residuated lattice.
///
/// Instances are immutable once built and may be shared freely across threads.
/// The only way to obtain one is through `validate`.
class ResiduatedLattice {
 public:
  std::size_t size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element a) const { return labels_[a]; }
  std::optional<Element> find(std::string_view label) const;

  Element bot() const { return bot_; }
  Element top() const { return top_; }

  bool leq(Element a, Element b) const { return leq_[idx(a, b)] != 0; }
  Element join(Element a, Element b) const { return join_[idx(a, b)]; }
  Element meet(Element a, Element b) const { return meet_[idx(a, b)]; }
  Element odot(Element a, Element b) const { return odot_[idx(a, b)]; }
  Element imp(Element a, Element b) const { return imp_[idx(a, b)]; }

  Element neg(Element a) const { return imp(a, bot_); }
  Element biresiduum(Element a, Element b) const { return meet(imp(a, b), imp(b, a)); }
  /// a^n with a^0 = top.
  Element power(Element a, std::size_t n) const;
  /// The stationary value of a, a^2, a^3, ... (an idempotent).
  Element idempotent_power(Element a) const { return stable_power_[a]; }

  Subset carrier() const { return Subset::full(n_); }
  /// {x : a <= x}
  Subset up_set(Element a) const { return up_[a]; }
  /// {x : x <= a}
  Subset down_set(Element a) const { return down_[a]; }

  const Table& join_table() const { return join_; }
  const Table& meet_table() const { return meet_; }
  const Table& odot_table() const { return odot_; }
  const Table& imp_table() const { return imp_; }
  const std::vector<std::uint8_t>& leq_matrix() const { return leq_; }

  /// Full description, including derived tables.
  RawAlgebra raw() const;

  bool operator==(const ResiduatedLattice& other) const;

 private:
  friend ResiduatedLattice validate(const RawAlgebra& raw);

  std::size_t idx(Element a, Element b) const { return static_cast<std::size_t>(a) * n_ + b; }

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  Table join_, meet_, odot_, imp_;
  Element bot_ = 0, top_ = 0;
  std::vector<Subset> up_, down_;
  std::vector<Element> stable_power_;
};

/// Checks every residuated-lattice axiom exhaustively and returns the algebra.
///
/// Checks run in a fixed order (order axioms, bounds, lattice, monoid,
/// residuation) and scan elements in id order, so the reported witness is the
/// first failing instance. Throws AxiomViolation, NotResiduated (when the
/// implication must be derived and cannot be) or InvalidArgument for
/// malformed dimensions.
ResiduatedLattice validate(const RawAlgebra& raw);

/// Computes b -> c as the maximum of {a : a * b <= c} for every pair.
/// Uses `raw.leq` and `raw.odot` only. Throws NotResiduated(b, c) when some
/// set has no maximum.
Table derive_implication(const RawAlgebra& raw);

/// Membership of elements in the distinguished classes, plus the global
/// predicates they induce.
struct ElementClassReport {
  Subset boolean_center;
  Subset idempotents;
  Subset regulars;
  Subset nilpotents;
  Subset archimedeans;
  bool is_godel = false;
  bool is_involutive = false;
  bool is_chain = false;
  bool is_distributive = false;
  bool is_hyperarchimedean = false;
};

ElementClassReport classify(const ResiduatedLattice& a);

bool is_boolean_element(const ResiduatedLattice& a, Element x);
bool is_chain(const ResiduatedLattice& a);
bool is_distributive(const ResiduatedLattice& a);
bool is_nilpotent(const ResiduatedLattice& a, Element x);
bool is_archimedean(const ResiduatedLattice& a, Element x);

/// Complement of x in the bounded lattice reduct, if one exists (least id).
std::optional<Element> lattice_complement(const ResiduatedLattice& a, Element x);

/// Builds the reflexive-transitive closure of a list of pairs (x <= y).
std::vector<std::uint8_t> order_closure(std::size_t n,
                                        const std::vector<std::pair<Element, Element>>& pairs);

/// Covering pairs (Hasse diagram edges) of a partial order, in id order.
std::vector<std::pair<Element, Element>> covering_pairs(std::size_t n,
                                                        const std::vector<std::uint8_t>& leq);

}  // namespace rlx

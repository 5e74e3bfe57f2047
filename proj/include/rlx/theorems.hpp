#pragma once

#include <string>
#include <vector>

#include "rlx/algebra.hpp"

namespace rlx {

enum class Relation { Iff, Implies };

/// One checked statement. `lhs` and `rhs` are the two sides evaluated
/// independently; for statements with a hypothesis, a row whose hypothesis
/// fails agrees and says so in `witness`. For identities checked over many
/// elements, both sides are true when every instance matches, otherwise they
/// hold the values at the first mismatch named in `witness`.
struct TheoremRow {
  std::string theorem_id;
  Relation relation = Relation::Iff;
  bool lhs = false;
  bool rhs = false;
  bool agree = false;
  std::string witness;
};

struct TheoremReport {
  std::vector<TheoremRow> rows;
  std::vector<std::string> notes;

  std::size_t disagreements() const;
};

/// Evaluates every characterization theorem on one algebra. Groups of rows
/// are computed in parallel; row order is fixed.
TheoremReport theorem_checks(const ResiduatedLattice& a);
/// Single-threaded reference.
TheoremReport theorem_checks_serial(const ResiduatedLattice& a);

/// Whether A is a finite product of local algebras, decided by splitting A
/// along the atoms e of B(A) into the factors A/[e), testing each factor for
/// locality and confirming the product of the factors is isomorphic to A.
bool is_product_of_locals(const ResiduatedLattice& a);

}  // namespace rlx

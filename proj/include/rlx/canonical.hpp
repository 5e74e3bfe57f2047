#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rlx/algebra.hpp"
#include "rlx/dlattice.hpp"

namespace rlx {

/// A canonical relabelling: perm[old id] = new id, and the encoding of the
/// relabelled structure (size, order matrix, then the product table when
/// present). Isomorphic structures get identical codes; bottom goes to 0 and
/// top to size-1.
struct CanonicalForm {
  std::vector<Element> perm;
  std::vector<std::uint32_t> code;
};

// Individualization-refinement: the code is the least encoding over all
// leaves of the search tree, which is an isomorphism invariant because both
// the refinement and the choice of target cell are.
CanonicalForm canonical_form(const ResiduatedLattice& a);
CanonicalForm canonical_form(const BDLattice& l);
/// Canonical form of a bare bounded order (row-major 0/1 matrix).
CanonicalForm canonical_order(std::size_t n, const std::vector<std::uint8_t>& leq, Element bot, Element top);

/// The algebra relabelled by its canonical form, with labels 0, a, b, ..., 1
/// by new id (fallback `e<k>` past 24 letters). Idempotent.
ResiduatedLattice canonicalize(const ResiduatedLattice& a);
BDLattice canonicalize(const BDLattice& l);

/// An isomorphism a -> b (map[x] = image of x), if one exists.
std::optional<std::vector<Element>> find_isomorphism(const ResiduatedLattice& a, const ResiduatedLattice& b);
bool isomorphic(const ResiduatedLattice& a, const ResiduatedLattice& b);
bool isomorphic(const BDLattice& a, const BDLattice& b);

/// Hex FNV-1a digest of the canonical code.
std::string canonical_hash(const ResiduatedLattice& a);

/// Default labels for canonical carriers of size n.
std::vector<std::string> standard_labels(std::size_t n);

}  // namespace rlx

#pragma once

// Slow, independent re-derivations used as test oracles. Nothing here calls
// the library's decision procedures; only the validated tables are read.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rlx/algebra.hpp"
#include "rlx/dlattice.hpp"

namespace oracle {

using rlx::Element;
using rlx::ResiduatedLattice;
using rlx::Subset;

inline const std::string kFixtures = RLX_FIXTURES;
ResiduatedLattice fixture(const std::string& name);

/// Every subset that is non-empty, up-closed and closed under the product.
std::vector<Subset> filters_by_subset_scan(const ResiduatedLattice& a);
/// Close X u {1} under products and upward until nothing changes.
Subset generated_filter_by_fixpoint(const ResiduatedLattice& a, Subset x);
std::vector<Subset> primes_by_scan(const ResiduatedLattice& a);
std::vector<Subset> maxima_by_scan(const ResiduatedLattice& a);

/// Complemented elements via the lattice reduct (x has y with x|y=1, x&y=0).
Subset complemented(const ResiduatedLattice& a);
Subset idempotents(const ResiduatedLattice& a);
Subset regulars(const ResiduatedLattice& a);

/// Class of x modulo F: y with x->y and y->x both in F.
std::vector<Subset> quotient_classes(const ResiduatedLattice& a, Subset f);

/// BLP of one filter read off the classes: every class that is complemented
/// among the classes contains a complemented element of A.
bool boolean_lifting_by_classes(const ResiduatedLattice& a, Subset f);

/// Isomorphism test over all permutations fixing bottom and top.
bool isomorphic_by_permutations(const ResiduatedLattice& a, const ResiduatedLattice& b);

/// Residuated lattices of size n <= 4 up to isomorphism, generated from all
/// bounded partial orders and all commutative tables with unit top.
std::size_t count_algebras_slowly(std::size_t n);

/// {x : x & y = 0 implies y = 0} computed directly.
Subset lattice_radical_by_definition(const rlx::BDLattice& l);

}  // namespace oracle

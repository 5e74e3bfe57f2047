#pragma once

#include <cstddef>

#include "rlx/algebra.hpp"

namespace rlx {

/// Boolean algebra with `atoms` atoms (0 gives the trivial algebra).
/// Element ids are bit masks over the atoms; at most 6 atoms.
ResiduatedLattice boolean_algebra(std::size_t atoms);

/// n-element chain with x * y = min(x, y); n >= 1.
ResiduatedLattice godel_chain(std::size_t n);

/// n-element MV chain: i * j = max(0, i + j - (n-1)), i -> j = min(n-1, n-1-i+j); n >= 2.
ResiduatedLattice lukasiewicz_chain(std::size_t n);

/// Componentwise product; the pair (x, y) gets id x * |b| + y.
ResiduatedLattice direct_product(const ResiduatedLattice& a, const ResiduatedLattice& b);

/// Stacks c above r with the top of r identified with the bottom of c.
/// Elements of r other than its top come first (in r's id order), then c.
/// The result is validated, so a non-residuated combination throws.
ResiduatedLattice ordinal_sum(const ResiduatedLattice& r, const ResiduatedLattice& c);

/// The algebra [e) for a Boolean element e, with bottom e and
/// a ->_e b = e v (a -> b). Elements keep their labels, in id order.
ResiduatedLattice upset_algebra(const ResiduatedLattice& a, Element e);

/// Identity-on-carrier relabelling with fresh labels.
ResiduatedLattice relabel(const ResiduatedLattice& a, std::vector<std::string> labels);

/// Moves element i of `a` to position perm[i].
ResiduatedLattice permute(const ResiduatedLattice& a, const std::vector<Element>& perm);

}  // namespace rlx

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "rlx/algebra.hpp"
#include "rlx/dlattice.hpp"

namespace rlx {

/// Bumped whenever enumeration output changes; part of the cache key.
inline constexpr int kGeneratorVersion = 1;
inline constexpr std::size_t kMaxEnumerationSize = 7;
inline constexpr std::size_t kMaxLatticeEnumerationSize = 8;

/// Lattice orders on n points up to isomorphism, each with bottom 0, top n-1
/// and a natural labelling (x <= y implies x <= y as ids), ordered by
/// canonical code. Throws SizeCapExceeded outside 1..8.
std::vector<std::vector<std::uint8_t>> enumerate_lattice_orders(std::size_t n);

/// Every residuated lattice on n elements, once per isomorphism class,
/// canonicalized and ordered by canonical code. Products are searched on
/// pairs of join-irreducibles and extended along joins; each lattice is
/// handled by its own worker. Throws SizeCapExceeded outside 1..7.
std::vector<ResiduatedLattice> enumerate_algebras(std::size_t n);
/// Single-threaded reference producing the same list.
std::vector<ResiduatedLattice> enumerate_algebras_serial(std::size_t n);
/// Calls `emit` on each algebra in order; returns the count.
std::size_t enumerate_algebras(std::size_t n, const std::function<void(const ResiduatedLattice&)>& emit);

/// All residuated products on one bounded lattice order, as row-major tables
/// (not deduplicated). Exposed for testing.
std::vector<Table> residuated_products(std::size_t n, const std::vector<std::uint8_t>& leq);

/// Bounded distributive lattices on n elements up to isomorphism,
/// canonicalized. Throws SizeCapExceeded outside 1..8.
std::vector<BDLattice> enumerate_bdl(std::size_t n);

}  // namespace rlx

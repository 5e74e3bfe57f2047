#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rlx/algebra.hpp"
#include "rlx/dlattice.hpp"

namespace rlx {

/// The enumerated algebras of size n. Served from memory after the first
/// call; when RLX_CORPUS_DIR is set the list is also read from (or written
/// to) a file there named by n and kGeneratorVersion.
const std::vector<ResiduatedLattice>& corpus(std::size_t n);
/// Every corpus algebra with 1 <= size <= max_size, by size.
std::vector<ResiduatedLattice> corpus_up_to(std::size_t max_size);

std::string corpus_file_name(std::size_t n);
/// .rlat entries separated by `---` lines.
std::string print_corpus(const std::vector<ResiduatedLattice>& algebras);
std::vector<ResiduatedLattice> parse_corpus(std::string_view text);

/// Failures collected over a list. Messages are prefixed by the index and
/// canonical hash of the offending item; at most `kMaxMessages` are kept but
/// all are counted.
struct SweepResult {
  static constexpr std::size_t kMaxMessages = 20;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> messages;

  bool ok() const { return failed == 0; }
};

/// Runs `check` on each algebra (one OpenMP task per algebra) and merges the
/// messages in list order. `check` returns the failures for one algebra.
using AlgebraCheck = std::function<std::vector<std::string>(const ResiduatedLattice&)>;
SweepResult sweep(const std::vector<ResiduatedLattice>& algebras, const AlgebraCheck& check);
SweepResult sweep_serial(const std::vector<ResiduatedLattice>& algebras, const AlgebraCheck& check);

using LatticeCheck = std::function<std::vector<std::string>(const BDLattice&)>;
SweepResult sweep(const std::vector<BDLattice>& lattices, const LatticeCheck& check);

// Per-algebra checks used by the sweeps.

/// has_rlp holds (and its internal lift check passes).
std::vector<std::string> check_rlp(const ResiduatedLattice& a);
/// Every theorem_checks row agrees.
std::vector<std::string> check_theorems(const ResiduatedLattice& a);
/// Axioms, the eight properties, uniqueness against the second construction,
/// per-filter BLP transfer, the archimedean bridge, and (for |A| <= 4) that
/// lambda commutes with intersections of every family of filters.
std::vector<std::string> check_reticulation(const ResiduatedLattice& a);
/// Chains, local and hyperarchimedean algebras have BLP; chains have ILP;
/// Lukasiewicz chains have B(A) = I(A) and BLP iff ILP per filter;
/// (*) implies BLP implies (**).
std::vector<std::string> check_class_facts(const ResiduatedLattice& a);
/// is_gelfand(A) iff L(A) is conormal.
std::vector<std::string> check_gelfand_conormal(const ResiduatedLattice& a);
/// Radical by annihilators equals the meet of the maximal filters; a
/// conormal lattice has a radical with lattice BLP.
std::vector<std::string> check_lattice_radical(const BDLattice& l);

/// product_lp_check for the BLP and ILP formulas on every ordered pair
/// (including a with itself); parallel over the first component.
SweepResult product_sweep(const std::vector<ResiduatedLattice>& algebras);
SweepResult product_sweep_serial(const std::vector<ResiduatedLattice>& algebras);

}  // namespace rlx

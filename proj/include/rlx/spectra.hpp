#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "rlx/algebra.hpp"
#include "rlx/filters.hpp"
#include "rlx/topology.hpp"

namespace rlx {

struct Reticulation;

/// Spec(A) with the Stone topology {D(F)}; points in filter order, basis D(a)
/// for every element a. The standard identities between V, D and the filter
/// operations are checked while building (std::logic_error on failure).
SpectrumSpace stone_spec(const ResiduatedLattice& a);
/// Max(A) with the induced topology {d(F)}; basis d(a).
SpectrumSpace stone_max(const ResiduatedLattice& a);

/// Points whose filter does not include `s` (D(F), or d(F) on a maximal
/// spectrum). For an element x use Subset::single(x).
Subset open_of(const SpectrumSpace& space, Subset s);
/// Points whose filter includes `s` (V(F) or v(F)).
Subset closed_of(const SpectrumSpace& space, Subset s);

std::vector<Subset> clopen_sets(const SpectrumSpace& space);

enum class SpectrumKind { Prime, Maximal };
/// {D(e) : e Boolean} (or {d(e)}), sorted and without repeats.
std::vector<Subset> clopen_via_boolean(const ResiduatedLattice& a, SpectrumKind which);

/// Every prime filter lies under exactly one maximal filter.
bool is_gelfand(const ResiduatedLattice& a);

/// The fifteen equivalent forms of the Gelfand property, index i holding
/// condition i+1:
///  1 Filt(A) normal            2 PFilt(A) normal          3 L(A) conormal
///  4 unique maximal over primes, in A (5: in L(A))
///  6 Max(A) a retract of Spec(A) by a continuous map (7: for L(A))
///  8 Spec(A) normal (9: Spec(L(A)))
/// 10 primes below each maximal form a closed set (11: in L(A))
/// 12 each maximal M is the only maximal over the meet of the primes below M
///    (13: in L(A))
/// 14 distinct maximals have disjoint neighbourhoods in Spec(A) (15: L(A))
struct GelfandConditions {
  std::array<bool, 15> holds{};
  bool all_agree() const;
};

GelfandConditions gelfand_conditions(const ResiduatedLattice& a);
GelfandConditions gelfand_conditions(const ResiduatedLattice& a, const Reticulation& r);

/// Point map Spec(A) -> Max(A) (indices into stone_spec / stone_max points)
/// sending P to the unique maximal filter over it. Checked to be continuous
/// and the identity on Max(A). Throws NotGelfand.
std::vector<Element> gelfand_retract(const ResiduatedLattice& a);

/// Whether some continuous map from `spec` onto the points `maximal` fixes
/// each of them (maximal[i] is the index in `spec` of the i-th maximal
/// point). Uses only that continuous maps preserve the specialization order.
bool has_continuous_retract(const FiniteSpace& spec, const std::vector<Element>& maximal,
                            std::optional<std::vector<Element>>* retract = nullptr);

/// (*): every [x) is [u) v [e) with u in Rad(A) and e Boolean.
/// `forms` holds the four equivalent descriptions:
///  0 direct, 1 a * e nilpotent and a | e in Rad(A),
///  2 v(a) in d(e) and d(a) in v(e), 3 v(a) in d(e) and v(!a^n) in v(e) for
///  1 <= n <= |A| (the power sequence is stationary by then).
struct StarReport {
  bool holds = false;
  std::array<bool, 4> forms{};
  std::optional<Element> witness;  // first x failing the direct form
  bool all_agree() const;
};

StarReport star_property(const ResiduatedLattice& a);

/// (**): every [x) is [u) v [e) with !u nilpotent and e Boolean.
struct StarStarReport {
  bool holds = false;
  std::optional<Element> witness;
};

StarStarReport star_star_property(const ResiduatedLattice& a);

}  // namespace rlx

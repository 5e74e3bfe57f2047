#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "rlx/algebra.hpp"
#include "rlx/dlattice.hpp"
#include "rlx/filters.hpp"

namespace rlx {

/// (L(A), lambda) built as the dual of the principal-filter lattice:
/// lattice ids follow the filters by decreasing size (so A is 0 and {1} is
/// the top), lambda(a) is the id of [a), and each lattice element is labelled
/// by the least element of its filter.
struct Reticulation {
  ResiduatedLattice source;
  BDLattice lattice;
  std::vector<Element> lambda;
  std::vector<Filter> filter_of;

  /// lambda(S) as a lattice subset.
  Subset image(Subset s) const;
  /// lambda^{-1}(S).
  Subset preimage(Subset s) const;
};

/// Checks the five defining conditions and distributivity
/// (std::logic_error / NotDistributive on failure).
Reticulation build_reticulation(const ResiduatedLattice& a);

/// Second construction: the carrier modulo a ~ b iff a^n <= b and b^n <= a
/// for some n, ordered by that preorder. Filters are never consulted.
Reticulation build_reticulation_by_powers(const ResiduatedLattice& a);

/// Results of the structural checks. `axioms` are the five defining
/// conditions (meet from *, join, bounds, surjectivity, order via powers);
/// `properties` are, in order: lambda preserves meets; lambda(a) = lambda(b)
/// iff [a) = [b); lambda(a^n) = lambda(a); preimage is a lattice isomorphism
/// Filt(L(A)) -> Filt(A) with inverse F -> lambda(F); preimage is a
/// homeomorphism on prime spectra; likewise on maximal spectra; lambda is a
/// Boolean isomorphism B(A) -> B(L(A)); L(A/F) is isomorphic to
/// L(A)/lambda(F) through lambda_F(a/F) -> lambda(a)/lambda(F) for every F.
struct ReticVerdict {
  std::array<bool, 5> axioms{};
  std::array<bool, 8> properties{};
  bool all() const;
};

ReticVerdict verify_retic_properties(const Reticulation& r);

/// Lattice isomorphism f with f(lambda1(a)) = lambda2(a). Throws NoIsomorphism.
std::vector<Element> uniqueness_check(const Reticulation& r1, const Reticulation& r2);

/// A map between residuated lattices preserving every operation and bounds.
struct RLMorphism {
  ResiduatedLattice source;
  ResiduatedLattice target;
  std::vector<Element> map;
};

bool is_morphism(const ResiduatedLattice& source, const ResiduatedLattice& target, const std::vector<Element>& map);
/// Throws InvalidArgument when `map` is not a morphism.
RLMorphism make_morphism(const ResiduatedLattice& source, const ResiduatedLattice& target, std::vector<Element> map);
/// All morphisms, maps in lexicographic order.
std::vector<RLMorphism> enumerate_morphisms(const ResiduatedLattice& source, const ResiduatedLattice& target);
RLMorphism compose(const RLMorphism& g, const RLMorphism& f);  // g after f
RLMorphism identity_morphism(const ResiduatedLattice& a);

/// L(f): lambda_B(b) -> lambda_C(f(b)), checked well defined and a bounded
/// lattice morphism (std::logic_error otherwise).
std::vector<Element> reticulate_morphism(const RLMorphism& f);
std::vector<Element> reticulate_morphism(const RLMorphism& f, const Reticulation& rb, const Reticulation& rc);

struct BlpTransfer {
  bool in_algebra = false;
  bool in_lattice = false;
};

/// BLP of F in A and of lambda(F) in L(A), each computed on its own side.
BlpTransfer blp_transfer(const ResiduatedLattice& a, const Filter& f);
BlpTransfer blp_transfer(const Reticulation& r, const Filter& f);

struct ArchimedeanBridge {
  bool elementwise = false;       // a archimedean iff lambda(a) Boolean
  bool hyperarchimedean = false;  // A hyperarchimedean iff L(A) Boolean
  bool radical = false;           // lambda(Rad A) = Rad L(A)
  bool local = false;             // A local iff L(A) local
  bool semilocal = false;         // |Max A| = |Max L(A)|
  bool all() const { return elementwise && hyperarchimedean && radical && local && semilocal; }
};

ArchimedeanBridge archimedean_bridge(const Reticulation& r);

}  // namespace rlx

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rlx/algebra.hpp"
#include "rlx/filters.hpp"
#include "rlx/formula.hpp"

namespace rlx {

/// Outcome of the lifting test for one filter F.
///
/// `counterexample` is the least a with a/F in (A/F)(phi) but a/F outside
/// A(phi)/F. When the property holds, `witness` is the least lift e in
/// A(phi) of the first class a/F in (A/F)(phi) whose least member is not
/// itself in A(phi) (none if no class needed a nontrivial lift).
struct LpEvidence {
  bool holds = false;
  std::optional<Element> counterexample;
  std::optional<Element> witness;
};

struct LpFilterEntry {
  Filter filter;
  LpEvidence evidence;
};

struct LpReport {
  Formula formula;
  std::vector<LpFilterEntry> per_filter;  // filter order
  bool global = false;
};

/// Tests (A/F)(phi) inside the image of A(phi).
LpEvidence has_phi_lp(const ResiduatedLattice& a, const Formula& phi, const Filter& f);

/// One entry per filter; per-filter checks run in parallel.
LpReport lp_report(const ResiduatedLattice& a, const Formula& phi);
/// Single-threaded reference for lp_report.
LpReport lp_report_serial(const ResiduatedLattice& a, const Formula& phi);

bool has_blp(const ResiduatedLattice& a);
bool has_ilp(const ResiduatedLattice& a);
/// Always true. Also confirms that e = !!a lifts every regular class a/F,
/// throwing std::logic_error otherwise.
bool has_rlp(const ResiduatedLattice& a);

/// For t1 = t2 without witnesses: every a has some e in A(phi) with
/// d(a, e) in [d(t1(a), t2(a))). Throws NotAtomic.
bool atomic_lp_characterization(const ResiduatedLattice& a, const Formula& phi);
/// The BLP case: d(a, e) in [a | !a) for some Boolean e.
bool blp_by_excluded_middle_filter(const ResiduatedLattice& a);
/// The ILP case: d(a, e) in [d(a, a^2)) for some idempotent e.
bool ilp_by_square_distance(const ResiduatedLattice& a);

struct PropBlpConditions {
  bool lifting = false;          // BLP
  bool principal_split = false;  // every x: e in [x), !e in [!x)
  bool zero_product = false;     // x * y = 0: e in [x), !e in [y)
  bool tuple_split = false;      // n-ary form, 2 <= n <= max_arity
  std::size_t max_arity = 4;
  std::optional<Element> principal_split_witness;
  std::optional<std::pair<Element, Element>> zero_product_witness;
  std::vector<Element> tuple_split_witness;  // empty when none
};

/// Four equivalent descriptions of BLP. The tuple form quantifies over
/// x1 * ... * xn = 0 and asks for Boolean e_i in [x_i) with meet 0 and
/// pairwise joins 1; tuples are taken up to reordering.
PropBlpConditions propblp_conditions(const ResiduatedLattice& a, std::size_t max_arity = 4);

struct ProductLpCheck {
  bool product = false;
  bool left = false;
  bool right = false;
  /// (A x B)(phi) equals A(phi) x B(phi).
  bool definable_sets_agree = false;

  bool consistent() const { return definable_sets_agree && product == (left && right); }
};

ProductLpCheck product_lp_check(const ResiduatedLattice& a, const ResiduatedLattice& b, const Formula& phi);

}  // namespace rlx

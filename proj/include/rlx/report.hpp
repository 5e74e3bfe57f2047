#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rlx/algebra.hpp"
#include "rlx/filters.hpp"
#include "rlx/lifting.hpp"
#include "rlx/spectra.hpp"
#include "rlx/theorems.hpp"
#include "rlx/topology.hpp"

namespace rlx {

struct ReportOptions {
  bool topology = false;  // opens, clopens and the topology predicates
  bool theorems = true;
};

struct FilterVerdict {
  Filter filter;
  Element generator = 0;
  bool prime = false;
  bool maximal = false;
  LpEvidence blp, ilp, rlp;
};

struct SpectrumSummary {
  std::vector<Subset> points;  // filters, in filter order
  std::vector<Subset> opens;   // point sets; filled with the topology option
  std::vector<Subset> clopens;
  std::optional<TopologyPredicates> predicates;
};

struct ReticulationSummary {
  std::vector<std::string> labels;
  std::vector<std::pair<Element, Element>> covers;
  std::vector<Element> lambda;
  bool boolean = false;
  bool conormal = false;
  bool blp = false;
};

/// Everything `rlx analyze` prints. A pure function of the algebra and the
/// options; the text and JSON renderings carry the same verdicts.
struct AnalysisReport {
  std::string hash;
  std::vector<std::string> labels;
  ElementClassReport classes;
  std::vector<FilterVerdict> filters;
  bool blp = false, ilp = false, rlp = false;
  Filter radical;
  bool local = false, semisimple = false;
  SpectrumSummary spec, max;
  bool gelfand = false;
  GelfandConditions gelfand_conditions;
  /// First prime filter that does not lie under exactly one maximal filter.
  std::optional<Subset> gelfand_witness;
  StarReport star;
  StarStarReport star_star;
  ReticulationSummary reticulation;
  std::optional<TheoremReport> theorems;
};

AnalysisReport analyze(const ResiduatedLattice& a, const ReportOptions& options = {});
std::string to_text(const AnalysisReport& r);
nlohmann::ordered_json to_json(const AnalysisReport& r);

/// `check-theorems` output. Rows follow the fixed schema
/// {theorem_id, lhs, rhs, agree, witness}.
std::string theorems_text(const TheoremReport& t);
nlohmann::ordered_json theorems_json(const ResiduatedLattice& a, const TheoremReport& t);

/// `lp` output for one formula.
std::string lp_text(const ResiduatedLattice& a, const LpReport& r);
nlohmann::ordered_json lp_json(const ResiduatedLattice& a, const LpReport& r);

/// `[g)` for the filter generated by its least element g.
std::string filter_name(const ResiduatedLattice& a, const Filter& f);

}  // namespace rlx

#include "rlx/report.hpp"

#include <iomanip>
#include <sstream>

#include "rlx/canonical.hpp"
#include "rlx/dlattice.hpp"
#include "rlx/formula.hpp"
#include "rlx/reticulation.hpp"
#include "rlx/text_format.hpp"

namespace rlx {

using nlohmann::ordered_json;

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

ordered_json label_array(const std::vector<std::string>& labels, Subset s) {
  ordered_json j = ordered_json::array();
  for (Element x : s) j.push_back(labels[x]);
  return j;
}

ordered_json optional_label(const ResiduatedLattice& a, const std::optional<Element>& x) {
  return x ? ordered_json(a.label(*x)) : ordered_json(nullptr);
}

ordered_json evidence_json(const ResiduatedLattice& a, const LpEvidence& e) {
  return {{"holds", e.holds},
          {"counterexample", optional_label(a, e.counterexample)},
          {"witness", optional_label(a, e.witness)}};
}

std::string evidence_text(const ResiduatedLattice& a, const LpEvidence& e) {
  if (e.holds) return "yes";
  return std::string("no (") + (e.counterexample ? a.label(*e.counterexample) : "?") + ")";
}

ordered_json predicates_json(const TopologyPredicates& p) {
  return {{"t0", p.t0},
          {"t1", p.t1},
          {"hausdorff", p.hausdorff},
          {"compact", p.compact},
          {"zero_dimensional", p.zero_dim},
          {"strongly_zero_dimensional", p.strongly_zero_dim},
          {"normal", p.normal},
          {"boolean_space", p.boolean_space}};
}

std::string predicates_text(const TopologyPredicates& p) {
  std::ostringstream os;
  os << "T0 " << yn(p.t0) << "  T1 " << yn(p.t1) << "  Hausdorff " << yn(p.hausdorff) << "  compact "
     << yn(p.compact) << "  zero-dimensional " << yn(p.zero_dim) << "  strongly zero-dimensional "
     << yn(p.strongly_zero_dim) << "  normal " << yn(p.normal) << "  Boolean " << yn(p.boolean_space);
  return os.str();
}

SpectrumSummary summarize(const SpectrumSpace& s, bool topology) {
  SpectrumSummary out;
  out.points = s.points;
  if (topology) {
    out.opens = s.space.opens();
    out.clopens = s.space.clopens();
    out.predicates = topology_predicates(s.space);
  }
  return out;
}

const char* relation_name(Relation r) { return r == Relation::Iff ? "iff" : "implies"; }

}  // namespace

std::string filter_name(const ResiduatedLattice& a, const Filter& f) {
  return "[" + a.label(min_generator(a, f)) + ")";
}

AnalysisReport analyze(const ResiduatedLattice& a, const ReportOptions& options) {
  AnalysisReport r;
  r.hash = canonical_hash(a);
  r.labels = a.labels();
  r.classes = classify(a);

  const LpReport blp = lp_report(a, blp_formula());
  const LpReport ilp = lp_report(a, ilp_formula());
  const LpReport rlp = lp_report(a, rlp_formula());
  r.blp = blp.global;
  r.ilp = ilp.global;
  r.rlp = rlp.global;
  for (std::size_t i = 0; i < blp.per_filter.size(); ++i) {
    FilterVerdict v;
    v.filter = blp.per_filter[i].filter;
    v.generator = min_generator(a, v.filter);
    v.prime = is_prime(a, v.filter);
    v.blp = blp.per_filter[i].evidence;
    v.ilp = ilp.per_filter[i].evidence;
    v.rlp = rlp.per_filter[i].evidence;
    r.filters.push_back(v);
  }
  const std::vector<Filter> maxima = max_spec(a);
  for (FilterVerdict& v : r.filters)
    for (const Filter& m : maxima)
      if (m == v.filter) v.maximal = true;

  r.radical = radical(a);
  r.local = is_local(a);
  r.semisimple = is_semisimple(a);
  r.spec = summarize(stone_spec(a), options.topology);
  r.max = summarize(stone_max(a), options.topology);

  r.gelfand = is_gelfand(a);
  const Reticulation ret = build_reticulation(a);
  r.gelfand_conditions = gelfand_conditions(a, ret);
  for (const Filter& p : spec(a)) {
    std::size_t above = 0;
    for (const Filter& m : maxima) above += p.members.subset_of(m.members);
    if (above != 1) {
      r.gelfand_witness = p.members;
      break;
    }
  }
  r.star = star_property(a);
  r.star_star = star_star_property(a);

  r.reticulation.labels = ret.lattice.labels();
  r.reticulation.covers = covering_pairs(ret.lattice.size(), ret.lattice.leq_matrix());
  r.reticulation.lambda = ret.lambda;
  r.reticulation.boolean = is_boolean_lattice(ret.lattice);
  r.reticulation.conormal = is_conormal_lattice(ret.lattice);
  r.reticulation.blp = lattice_blp(ret.lattice).global;

  if (options.theorems) r.theorems = theorem_checks(a);
  return r;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  const auto& L = r.labels;
  os << "algebra " << r.hash << " (" << L.size() << " elements:";
  for (const auto& l : L) os << " " << l;
  os << ")\n";
  os << "classes\n";
  os << "  boolean center  " << format_subset(L, r.classes.boolean_center) << "\n";
  os << "  idempotents     " << format_subset(L, r.classes.idempotents) << "\n";
  os << "  regulars        " << format_subset(L, r.classes.regulars) << "\n";
  os << "  nilpotents      " << format_subset(L, r.classes.nilpotents) << "\n";
  os << "  archimedeans    " << format_subset(L, r.classes.archimedeans) << "\n";
  os << "  Godel " << yn(r.classes.is_godel) << "  involutive " << yn(r.classes.is_involutive) << "  chain "
     << yn(r.classes.is_chain) << "  distributive " << yn(r.classes.is_distributive) << "  hyperarchimedean "
     << yn(r.classes.is_hyperarchimedean) << "\n";

  os << "filters\n";
  for (const FilterVerdict& v : r.filters) {
    std::string head = "[" + L[v.generator] + ") = " + format_subset(L, v.filter.members);
    std::string kind = v.maximal ? "maximal" : v.prime ? "prime" : "";
    os << "  " << std::left << std::setw(24) << head << std::setw(9) << kind;
    os << "BLP " << (v.blp.holds ? "yes" : "no (" + L[*v.blp.counterexample] + ")");
    os << "  ILP " << (v.ilp.holds ? "yes" : "no (" + L[*v.ilp.counterexample] + ")");
    os << "  RLP " << (v.rlp.holds ? "yes" : "no (" + L[*v.rlp.counterexample] + ")") << "\n";
  }
  os << "lifting  BLP " << yn(r.blp) << "  ILP " << yn(r.ilp) << "  RLP " << yn(r.rlp) << "\n";
  os << "radical " << format_subset(L, r.radical.members) << "  local " << yn(r.local) << "  semisimple "
     << yn(r.semisimple) << "\n";

  auto point_name = [&](Subset p) {
    for (const FilterVerdict& v : r.filters)
      if (v.filter.members == p) return "[" + L[v.generator] + ")";
    return format_subset(L, p);
  };
  auto family = [&](const std::vector<Subset>& points, Subset s) {
    std::string out = "{";
    bool first = true;
    for (Element p : s) {
      if (!first) out += ",";
      first = false;
      out += point_name(points[p]);
    }
    return out + "}";
  };
  auto spectrum = [&](const char* name, const SpectrumSummary& s) {
    os << name << " " << family(s.points, Subset::full(s.points.size())) << "\n";
    if (!s.predicates) return;
    os << "  opens";
    for (Subset o : s.opens) os << " " << family(s.points, o);
    os << "\n  clopens";
    for (Subset o : s.clopens) os << " " << family(s.points, o);
    os << "\n  " << predicates_text(*s.predicates) << "\n";
  };
  spectrum("Spec", r.spec);
  spectrum("Max", r.max);

  os << "Gelfand " << yn(r.gelfand);
  if (r.gelfand_witness) os << " (prime " << point_name(*r.gelfand_witness) << " is not under exactly one maximal)";
  os << "\n  conditions ";
  for (bool b : r.gelfand_conditions.holds) os << (b ? '1' : '0');
  os << "\n";
  os << "(*) " << yn(r.star.holds);
  if (r.star.witness) os << " (fails at " << L[*r.star.witness] << ")";
  os << "  forms ";
  for (bool b : r.star.forms) os << (b ? '1' : '0');
  os << "  (**) " << yn(r.star_star.holds);
  if (r.star_star.witness) os << " (fails at " << L[*r.star_star.witness] << ")";
  os << "\n";

  const auto& R = r.reticulation;
  os << "reticulation " << R.labels.size() << " elements, order";
  for (auto [x, y] : R.covers) os << " " << R.labels[x] << "<" << R.labels[y];
  os << "\n  lambda";
  for (std::size_t x = 0; x < L.size(); ++x) os << " " << L[x] << "->" << R.labels[R.lambda[x]];
  os << "\n  Boolean " << yn(R.boolean) << "  conormal " << yn(R.conormal) << "  BLP " << yn(R.blp) << "\n";

  if (r.theorems) os << theorems_text(*r.theorems);
  return os.str();
}

ordered_json to_json(const AnalysisReport& r) {
  const auto& L = r.labels;
  ordered_json j;
  j["hash"] = r.hash;
  j["elements"] = L;
  j["classes"] = {{"boolean_center", label_array(L, r.classes.boolean_center)},
                  {"idempotents", label_array(L, r.classes.idempotents)},
                  {"regulars", label_array(L, r.classes.regulars)},
                  {"nilpotents", label_array(L, r.classes.nilpotents)},
                  {"archimedeans", label_array(L, r.classes.archimedeans)},
                  {"is_godel", r.classes.is_godel},
                  {"is_involutive", r.classes.is_involutive},
                  {"is_chain", r.classes.is_chain},
                  {"is_distributive", r.classes.is_distributive},
                  {"is_hyperarchimedean", r.classes.is_hyperarchimedean}};
  auto ev = [&](const LpEvidence& e) {
    return ordered_json{{"holds", e.holds},
                        {"counterexample", e.counterexample ? ordered_json(L[*e.counterexample]) : ordered_json()},
                        {"witness", e.witness ? ordered_json(L[*e.witness]) : ordered_json()}};
  };
  ordered_json filters = ordered_json::array();
  for (const FilterVerdict& v : r.filters)
    filters.push_back({{"name", "[" + L[v.generator] + ")"},
                       {"members", label_array(L, v.filter.members)},
                       {"prime", v.prime},
                       {"maximal", v.maximal},
                       {"blp", ev(v.blp)},
                       {"ilp", ev(v.ilp)},
                       {"rlp", ev(v.rlp)}});
  j["filters"] = filters;
  j["lifting"] = {{"blp", r.blp}, {"ilp", r.ilp}, {"rlp", r.rlp}};
  j["radical"] = label_array(L, r.radical.members);
  j["local"] = r.local;
  j["semisimple"] = r.semisimple;

  auto point_name = [&](Subset p) {
    for (const FilterVerdict& v : r.filters)
      if (v.filter.members == p) return "[" + L[v.generator] + ")";
    return format_subset(L, p);
  };
  auto spectrum = [&](const SpectrumSummary& s) {
    ordered_json out;
    ordered_json pts = ordered_json::array();
    for (Subset p : s.points) pts.push_back(point_name(p));
    out["points"] = pts;
    if (s.predicates) {
      auto sets = [&](const std::vector<Subset>& fam) {
        ordered_json arr = ordered_json::array();
        for (Subset o : fam) {
          ordered_json one = ordered_json::array();
          for (Element p : o) one.push_back(point_name(s.points[p]));
          arr.push_back(one);
        }
        return arr;
      };
      out["opens"] = sets(s.opens);
      out["clopens"] = sets(s.clopens);
      out["predicates"] = predicates_json(*s.predicates);
    }
    return out;
  };
  j["spec"] = spectrum(r.spec);
  j["max"] = spectrum(r.max);

  ordered_json conds = ordered_json::array();
  for (bool b : r.gelfand_conditions.holds) conds.push_back(b);
  j["gelfand"] = {{"holds", r.gelfand},
                  {"conditions", conds},
                  {"witness", r.gelfand_witness ? ordered_json(point_name(*r.gelfand_witness)) : ordered_json()}};
  ordered_json forms = ordered_json::array();
  for (bool b : r.star.forms) forms.push_back(b);
  j["star"] = {{"holds", r.star.holds},
               {"forms", forms},
               {"witness", r.star.witness ? ordered_json(L[*r.star.witness]) : ordered_json()}};
  j["star_star"] = {{"holds", r.star_star.holds},
                    {"witness", r.star_star.witness ? ordered_json(L[*r.star_star.witness]) : ordered_json()}};

  const auto& R = r.reticulation;
  ordered_json covers = ordered_json::array();
  for (auto [x, y] : R.covers) covers.push_back(R.labels[x] + "<" + R.labels[y]);
  ordered_json lambda = ordered_json::object();
  for (std::size_t x = 0; x < L.size(); ++x) lambda[L[x]] = R.labels[R.lambda[x]];
  j["reticulation"] = {{"elements", R.labels},
                       {"order", covers},
                       {"lambda", lambda},
                       {"boolean", R.boolean},
                       {"conormal", R.conormal},
                       {"blp", R.blp}};
  if (r.theorems) {
    ordered_json rows = ordered_json::array();
    for (const TheoremRow& row : r.theorems->rows)
      rows.push_back({{"theorem_id", row.theorem_id},
                      {"lhs", row.lhs},
                      {"rhs", row.rhs},
                      {"agree", row.agree},
                      {"witness", row.witness}});
    j["theorems"] = rows;
  }
  return j;
}

std::string theorems_text(const TheoremReport& t) {
  std::ostringstream os;
  os << "theorems " << t.rows.size() << " rows, " << t.disagreements() << " disagreements\n";
  for (const TheoremRow& row : t.rows) {
    os << "  " << (row.agree ? "agree   " : "DISAGREE") << " " << std::left << std::setw(8)
       << relation_name(row.relation) << row.lhs << " " << row.rhs << "  " << row.theorem_id;
    if (!row.witness.empty()) os << "  (" << row.witness << ")";
    os << "\n";
  }
  for (const std::string& note : t.notes) os << "note: " << note << "\n";
  return os.str();
}

ordered_json theorems_json(const ResiduatedLattice& a, const TheoremReport& t) {
  ordered_json rows = ordered_json::array();
  for (const TheoremRow& row : t.rows)
    rows.push_back({{"theorem_id", row.theorem_id},
                    {"lhs", row.lhs},
                    {"rhs", row.rhs},
                    {"agree", row.agree},
                    {"witness", row.witness}});
  return {{"hash", canonical_hash(a)},
          {"rows", rows},
          {"disagreements", t.disagreements()},
          {"notes", t.notes}};
}

std::string lp_text(const ResiduatedLattice& a, const LpReport& r) {
  std::ostringstream os;
  os << "formula " << print_formula(r.formula) << "\n";
  for (const LpFilterEntry& e : r.per_filter) {
    os << "  " << std::left << std::setw(24)
       << (filter_name(a, e.filter) + " = " + format_subset(a.labels(), e.filter.members))
       << evidence_text(a, e.evidence);
    if (e.evidence.holds && e.evidence.witness) os << "  lift " << a.label(*e.evidence.witness);
    os << "\n";
  }
  os << "global " << yn(r.global) << "\n";
  return os.str();
}

ordered_json lp_json(const ResiduatedLattice& a, const LpReport& r) {
  ordered_json rows = ordered_json::array();
  for (const LpFilterEntry& e : r.per_filter)
    rows.push_back({{"filter", filter_name(a, e.filter)},
                    {"members", label_array(a.labels(), e.filter.members)},
                    {"evidence", evidence_json(a, e.evidence)}});
  return {{"formula", print_formula(r.formula)}, {"filters", rows}, {"global", r.global}};
}

}  // namespace rlx

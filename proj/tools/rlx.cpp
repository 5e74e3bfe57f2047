#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rlx/canonical.hpp"
#include "rlx/corpus.hpp"
#include "rlx/enumerate.hpp"
#include "rlx/filters.hpp"
#include "rlx/formula.hpp"
#include "rlx/lifting.hpp"
#include "rlx/report.hpp"
#include "rlx/reticulation.hpp"
#include "rlx/text_format.hpp"
#include "rlx/theorems.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kDisagreement = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

rlx::ResiduatedLattice load(const std::string& path) {
  try {
    return rlx::parse_rlat(rlx::read_file(path));
  } catch (const rlx::Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// `[x)` names a principal filter; otherwise a label list that must already be
// a filter.
rlx::Filter read_filter(const rlx::ResiduatedLattice& a, const std::string& text) {
  if (text.size() >= 3 && text.front() == '[' && text.back() == ')') {
    const auto x = a.find(text.substr(1, text.size() - 2));
    if (!x) throw InputError("unknown element in filter " + text);
    return rlx::principal_filter(a, *x);
  }
  rlx::Subset s;
  try {
    s = rlx::parse_label_list(a.labels(), text);
  } catch (const rlx::Error& e) {
    throw InputError(std::string("bad filter: ") + e.what());
  }
  if (!rlx::is_filter(a, s)) throw InputError("not a filter: " + rlx::format_subset(a.labels(), s));
  return rlx::Filter{s};
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    rlx::write_file(out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite residuated lattice workbench"};
  app.require_subcommand(1);
  int status = kOk;

  std::string file, out, formula_text, filter_text;
  bool json = false, topology = false, verify = false, blp = false, ilp = false, rlp = false;
  std::size_t size = 0;

  auto* validate_cmd = app.add_subcommand("validate", "Check the axioms of an algebra file");
  validate_cmd->add_option("file", file)->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report on one algebra");
  analyze_cmd->add_option("file", file)->required();
  analyze_cmd->add_flag("--topology", topology, "Include opens, clopens and topology predicates");
  analyze_cmd->add_flag("--json", json);

  auto* lp_cmd = app.add_subcommand("lp", "Lifting property for a formula");
  lp_cmd->add_option("file", file)->required();
  lp_cmd->add_option("--formula", formula_text, "Formula, e.g. 'exists w . x | w = 1 && x & w = 0'");
  lp_cmd->add_option("--filter", filter_text, "Only this filter: '[x)' or a label list");
  lp_cmd->add_flag("--blp", blp);
  lp_cmd->add_flag("--ilp", ilp);
  lp_cmd->add_flag("--rlp", rlp);
  lp_cmd->add_flag("--json", json);

  auto* theorems_cmd = app.add_subcommand("check-theorems", "Evaluate every characterization on one algebra");
  theorems_cmd->add_option("file", file)->required();
  theorems_cmd->add_flag("--json", json);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "All algebras of a given size");
  enumerate_cmd->add_option("n", size)->required()->check(CLI::Range(1, 7));
  enumerate_cmd->add_option("--out", out, "Directory receiving one .rlat per algebra");

  auto* reticulate_cmd = app.add_subcommand("reticulate", "Reticulation as a .blat lattice");
  reticulate_cmd->add_option("file", file)->required();
  reticulate_cmd->add_option("--out", out);
  reticulate_cmd->add_flag("--verify", verify, "Check axioms, properties and uniqueness");

  auto* quotient_cmd = app.add_subcommand("quotient", "Quotient by a filter as a .rlat algebra");
  quotient_cmd->add_option("file", file)->required();
  quotient_cmd->add_option("--filter", filter_text)->required();
  quotient_cmd->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }

  try {
    if (validate_cmd->parsed()) {
      const auto a = load(file);
      std::cout << "valid: " << a.size() << " elements, hash " << rlx::canonical_hash(a) << "\n";
    } else if (analyze_cmd->parsed()) {
      const auto report = rlx::analyze(load(file), {.topology = topology, .theorems = true});
      if (json)
        std::cout << rlx::to_json(report).dump(2) << "\n";
      else
        std::cout << rlx::to_text(report);
      if (report.theorems && report.theorems->disagreements()) status = kDisagreement;
    } else if (lp_cmd->parsed()) {
      const auto a = load(file);
      std::vector<rlx::Formula> formulas;
      if (!formula_text.empty()) {
        try {
          formulas.push_back(rlx::parse_formula(formula_text));
        } catch (const rlx::Error& e) {
          throw InputError(std::string("formula: ") + e.what());
        }
      }
      if (blp) formulas.push_back(rlx::blp_formula());
      if (ilp) formulas.push_back(rlx::ilp_formula());
      if (rlp) formulas.push_back(rlx::rlp_formula());
      if (formulas.empty()) throw InputError("give --formula or one of --blp, --ilp, --rlp");
      std::optional<rlx::Filter> only;
      if (!filter_text.empty()) only = read_filter(a, filter_text);
      nlohmann::ordered_json all = nlohmann::ordered_json::array();
      for (const rlx::Formula& phi : formulas) {
        rlx::LpReport r;
        if (only) {
          r.formula = phi;
          const rlx::LpEvidence e = rlx::has_phi_lp(a, phi, *only);
          r.per_filter.push_back({*only, e});
          r.global = e.holds;
        } else {
          r = rlx::lp_report(a, phi);
        }
        if (json)
          all.push_back(rlx::lp_json(a, r));
        else
          std::cout << rlx::lp_text(a, r);
      }
      if (json) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
    } else if (theorems_cmd->parsed()) {
      const auto a = load(file);
      const rlx::TheoremReport t = rlx::theorem_checks(a);
      if (json)
        std::cout << rlx::theorems_json(a, t).dump(2) << "\n";
      else
        std::cout << rlx::theorems_text(t);
      if (t.disagreements()) status = kDisagreement;
    } else if (enumerate_cmd->parsed()) {
      const auto& list = rlx::corpus(size);
      std::cout << list.size() << " algebras of size " << size << "\n";
      if (!out.empty()) std::filesystem::create_directories(out);
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string hash = rlx::canonical_hash(list[i]);
        std::cout << i << " " << hash << "\n";
        if (!out.empty()) {
          const std::string name = "n" + std::to_string(size) + "-" + std::to_string(i) + ".rlat";
          rlx::write_file((std::filesystem::path(out) / name).string(), rlx::print_rlat(list[i]));
        }
      }
    } else if (reticulate_cmd->parsed()) {
      const auto a = load(file);
      const rlx::Reticulation r = rlx::build_reticulation(a);
      emit(rlx::print_blat(r.lattice), out);
      if (verify) {
        const rlx::ReticVerdict v = rlx::verify_retic_properties(r);
        bool unique = true;
        try {
          rlx::uniqueness_check(r, rlx::build_reticulation_by_powers(a));
        } catch (const rlx::NoIsomorphism&) {
          unique = false;
        }
        std::ostream& os = out.empty() ? std::cerr : std::cout;
        os << "axioms ";
        for (bool b : v.axioms) os << (b ? '1' : '0');
        os << "  properties ";
        for (bool b : v.properties) os << (b ? '1' : '0');
        os << "  unique " << (unique ? "yes" : "no") << "\n";
        if (!v.all() || !unique) status = kDisagreement;
      }
    } else if (quotient_cmd->parsed()) {
      const auto a = load(file);
      const rlx::Quotient q = rlx::quotient(a, read_filter(a, filter_text));
      emit(rlx::print_rlat(q.quotient), out);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const rlx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return status;
}

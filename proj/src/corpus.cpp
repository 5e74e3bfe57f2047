#include "rlx/corpus.hpp"

#include <cstdlib>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>

#include "rlx/canonical.hpp"
#include "rlx/constructors.hpp"
#include "rlx/enumerate.hpp"
#include "rlx/filters.hpp"
#include "rlx/formula.hpp"
#include "rlx/lifting.hpp"
#include "rlx/reticulation.hpp"
#include "rlx/spectra.hpp"
#include "rlx/text_format.hpp"
#include "rlx/theorems.hpp"

namespace rlx {

namespace {

constexpr std::string_view kSeparator = "---";

std::vector<ResiduatedLattice> load_or_enumerate(std::size_t n) {
  const char* dir = std::getenv("RLX_CORPUS_DIR");
  if (!dir || !*dir) return enumerate_algebras(n);
  const std::filesystem::path path = std::filesystem::path(dir) / corpus_file_name(n);
  if (std::filesystem::exists(path)) return parse_corpus(read_file(path.string()));
  std::vector<ResiduatedLattice> list = enumerate_algebras(n);
  std::filesystem::create_directories(dir);
  write_file(path.string(), print_corpus(list));
  return list;
}

void record(SweepResult& out, std::size_t index, const std::string& hash, const std::vector<std::string>& failures) {
  ++out.checked;
  if (failures.empty()) return;
  ++out.failed;
  for (const std::string& f : failures)
    if (out.messages.size() < SweepResult::kMaxMessages)
      out.messages.push_back("#" + std::to_string(index) + " " + hash + ": " + f);
}

std::string lattice_hash(const BDLattice& l) {
  std::string s;
  for (std::uint32_t c : canonical_form(l).code) s += std::to_string(c) + ".";
  return s;
}

template <class T, class Check, class Hash>
SweepResult run_sweep(const std::vector<T>& items, const Check& check, const Hash& hash, bool parallel) {
  std::vector<std::vector<std::string>> failures(items.size());
  const auto count = static_cast<std::ptrdiff_t>(items.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i)
      failures[static_cast<std::size_t>(i)] = check(items[static_cast<std::size_t>(i)]);
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i)
      failures[static_cast<std::size_t>(i)] = check(items[static_cast<std::size_t>(i)]);
  }
  SweepResult out;
  for (std::size_t i = 0; i < items.size(); ++i)
    record(out, i, failures[i].empty() ? std::string() : hash(items[i]), failures[i]);
  return out;
}

std::vector<std::string> product_failures(const std::vector<ResiduatedLattice>& algebras, std::size_t i) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < algebras.size(); ++j)
    for (const auto& [name, phi] : {std::pair{"BLP", &blp_formula()}, std::pair{"ILP", &ilp_formula()}}) {
      const ProductLpCheck c = product_lp_check(algebras[i], algebras[j], *phi);
      if (!c.consistent())
        out.push_back(std::string(name) + " on the product with #" + std::to_string(j) + ": product " +
                      std::to_string(c.product) + ", factors " + std::to_string(c.left) + "," +
                      std::to_string(c.right) + ", definable sets agree " + std::to_string(c.definable_sets_agree));
    }
  return out;
}

SweepResult run_product_sweep(const std::vector<ResiduatedLattice>& algebras, bool parallel) {
  std::vector<std::size_t> ids(algebras.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return run_sweep(
      ids, [&](std::size_t i) { return product_failures(algebras, i); },
      [&](std::size_t i) { return canonical_hash(algebras[i]); }, parallel);
}

bool is_lukasiewicz_chain(const ResiduatedLattice& a) {
  return a.size() >= 2 && is_chain(a) && isomorphic(a, lukasiewicz_chain(a.size()));
}

}  // namespace

std::string corpus_file_name(std::size_t n) {
  return "corpus-n" + std::to_string(n) + "-v" + std::to_string(kGeneratorVersion) + ".rlats";
}

std::string print_corpus(const std::vector<ResiduatedLattice>& algebras) {
  std::string out;
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    if (i) out += std::string(kSeparator) + "\n";
    out += print_rlat(algebras[i]);
  }
  return out;
}

std::vector<ResiduatedLattice> parse_corpus(std::string_view text) {
  std::vector<ResiduatedLattice> out;
  std::string chunk;
  auto flush = [&] {
    if (chunk.find_first_not_of(" \t\r\n") != std::string::npos) out.push_back(parse_rlat(chunk));
    chunk.clear();
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    if (line == kSeparator)
      flush();
    else
      chunk.append(line).push_back('\n');
    pos = end + 1;
  }
  flush();
  return out;
}

const std::vector<ResiduatedLattice>& corpus(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<std::vector<ResiduatedLattice>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<std::vector<ResiduatedLattice>>(load_or_enumerate(n));
  return *slot;
}

std::vector<ResiduatedLattice> corpus_up_to(std::size_t max_size) {
  std::vector<ResiduatedLattice> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const auto& part = corpus(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

SweepResult sweep(const std::vector<ResiduatedLattice>& algebras, const AlgebraCheck& check) {
  return run_sweep(algebras, check, canonical_hash, true);
}

SweepResult sweep_serial(const std::vector<ResiduatedLattice>& algebras, const AlgebraCheck& check) {
  return run_sweep(algebras, check, canonical_hash, false);
}

SweepResult sweep(const std::vector<BDLattice>& lattices, const LatticeCheck& check) {
  return run_sweep(lattices, check, lattice_hash, true);
}

SweepResult product_sweep(const std::vector<ResiduatedLattice>& algebras) {
  return run_product_sweep(algebras, true);
}

SweepResult product_sweep_serial(const std::vector<ResiduatedLattice>& algebras) {
  return run_product_sweep(algebras, false);
}

std::vector<std::string> check_rlp(const ResiduatedLattice& a) {
  try {
    if (!has_rlp(a)) return {"RLP fails"};
  } catch (const std::exception& e) {
    return {std::string("RLP check raised: ") + e.what()};
  }
  return {};
}

std::vector<std::string> check_theorems(const ResiduatedLattice& a) {
  std::vector<std::string> out;
  for (const TheoremRow& row : theorem_checks(a).rows)
    if (!row.agree)
      out.push_back(row.theorem_id + " (lhs " + std::to_string(row.lhs) + ", rhs " + std::to_string(row.rhs) +
                    ") " + row.witness);
  return out;
}

std::vector<std::string> check_reticulation(const ResiduatedLattice& a) {
  std::vector<std::string> out;
  try {
    const Reticulation r = build_reticulation(a);
    const ReticVerdict v = verify_retic_properties(r);
    for (std::size_t i = 0; i < v.axioms.size(); ++i)
      if (!v.axioms[i]) out.push_back("reticulation axiom " + std::to_string(i + 1) + " fails");
    for (std::size_t i = 0; i < v.properties.size(); ++i)
      if (!v.properties[i]) out.push_back("reticulation property " + std::to_string(i + 1) + " fails");
    try {
      uniqueness_check(r, build_reticulation_by_powers(a));
    } catch (const NoIsomorphism& e) {
      out.push_back(std::string("constructions differ: ") + e.what());
    }
    const std::vector<Filter> filters = all_filters(a);
    for (const Filter& f : filters) {
      const BlpTransfer t = blp_transfer(r, f);
      if (t.in_algebra != t.in_lattice)
        out.push_back("BLP transfer differs on " + format_subset(a.labels(), f.members));
    }
    if (!archimedean_bridge(r).all()) out.push_back("archimedean bridge fails");
    if (a.size() <= 4 && filters.size() < 16) {
      for (std::uint32_t family = 1; family < (1U << filters.size()); ++family) {
        Subset meet = a.carrier(), meet_of_images = r.lattice.carrier();
        for (std::size_t i = 0; i < filters.size(); ++i)
          if ((family >> i) & 1U) {
            meet &= filters[i].members;
            meet_of_images &= r.image(filters[i].members);
          }
        if (r.image(meet) != meet_of_images) {
          out.push_back("lambda does not commute with the intersection of family " + std::to_string(family));
          break;
        }
      }
    }
  } catch (const std::exception& e) {
    out.push_back(std::string("reticulation raised: ") + e.what());
  }
  return out;
}

std::vector<std::string> check_class_facts(const ResiduatedLattice& a) {
  std::vector<std::string> out;
  const ElementClassReport c = classify(a);
  const LpReport blp = lp_report(a, blp_formula());
  const LpReport ilp = lp_report(a, ilp_formula());
  if (c.is_chain && !(blp.global && ilp.global)) out.push_back("chain without BLP and ILP");
  if (is_local(a) && !blp.global) out.push_back("local algebra without BLP");
  if (c.is_hyperarchimedean && !blp.global) out.push_back("hyperarchimedean algebra without BLP");
  if (is_lukasiewicz_chain(a)) {
    if (c.boolean_center != c.idempotents) out.push_back("Lukasiewicz chain with B(A) != I(A)");
    for (std::size_t i = 0; i < blp.per_filter.size(); ++i)
      if (blp.per_filter[i].evidence.holds != ilp.per_filter[i].evidence.holds)
        out.push_back("Lukasiewicz chain: BLP and ILP differ on " +
                      format_subset(a.labels(), blp.per_filter[i].filter.members));
  }
  const bool star = star_property(a).holds;
  const bool star_star = star_star_property(a).holds;
  if (star && !blp.global) out.push_back("(*) without BLP");
  if (blp.global && !star_star) out.push_back("BLP without (**)");
  return out;
}

std::vector<std::string> check_gelfand_conormal(const ResiduatedLattice& a) {
  const bool gelfand = is_gelfand(a);
  const bool conormal = is_conormal_lattice(build_reticulation(a).lattice);
  if (gelfand == conormal) return {};
  return {"Gelfand " + std::to_string(gelfand) + " but L(A) conormal " + std::to_string(conormal)};
}

std::vector<std::string> check_lattice_radical(const BDLattice& l) {
  std::vector<std::string> out;
  if (lattice_radical(l) != lattice_radical_by_maximals(l))
    out.push_back("radical by annihilators " + format_subset(l.labels(), lattice_radical(l)) +
                  " differs from the meet of maximal filters " +
                  format_subset(l.labels(), lattice_radical_by_maximals(l)));
  if (is_conormal_lattice(l) && !radco_check(l)) out.push_back("conormal lattice whose radical lacks BLP");
  return out;
}

}  // namespace rlx

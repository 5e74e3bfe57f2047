#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rlx/algebra.hpp"

namespace rlx {

class BDLattice;

// .rlat:
//   # comment
//   elements: 0 a b c 1
//   order: 0<a 0<b a<c b<c c<1
//   odot:
//     <n rows of n labels>
//   imp: derive            (or n rows)
//
// Sections may appear in any order after `elements:`; `order:` pairs may run
// over several lines. Bottom and top are read off the order.

/// Parses .rlat text into an unvalidated description. Throws ParseError.
RawAlgebra parse_rlat_raw(std::string_view text);

/// parse_rlat_raw followed by validate.
ResiduatedLattice parse_rlat(std::string_view text);

/// Prints covering pairs and the odot and imp tables. parse_rlat(print_rlat(a)) == a.
std::string print_rlat(const ResiduatedLattice& a);

/// .blat: `elements:` and `order:` only.
BDLattice parse_blat(std::string_view text);
std::string print_blat(const BDLattice& l);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// Element subset written as `{x,y}` in id order.
std::string format_subset(const std::vector<std::string>& labels, Subset s);

/// Parses a comma separated label list ("c,1", "{c,1}" or "") into a subset.
Subset parse_label_list(const std::vector<std::string>& labels, std::string_view text);

}  // namespace rlx

#include "rlx/text_format.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "rlx/dlattice.hpp"

namespace rlx {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

struct Section {
  std::size_t line = 0;
  std::vector<Line> lines;  // header remainder first (if non-empty), then body lines
};

using Sections = std::map<std::string, Section>;

Sections split_sections(std::string_view text, std::initializer_list<std::string_view> allowed) {
  Sections out;
  Section* current = nullptr;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::vector<std::string> toks = split_ws(raw);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string& first = toks.front();
    const auto colon = first.find(':');
    bool header = false;
    if (colon != std::string::npos) {
      const std::string key = first.substr(0, colon);
      for (auto a : allowed) header = header || key == a;
      if (!header) throw ParseError("unknown section '" + key + "'", number);
      if (out.count(key)) throw ParseError("duplicate section '" + key + "'", number);
      current = &out[key];
      current->line = number;
      std::vector<std::string> rest;
      if (colon + 1 < first.size()) rest.push_back(first.substr(colon + 1));
      rest.insert(rest.end(), toks.begin() + 1, toks.end());
      if (!rest.empty()) current->lines.push_back({number, rest});
    } else {
      if (!current) throw ParseError("content before the first section", number);
      current->lines.push_back({number, toks});
    }
    if (end == text.size()) break;
  }
  return out;
}

struct Carrier {
  std::vector<std::string> labels;
  std::map<std::string, Element> index;
  std::vector<std::uint8_t> leq;
  Element bot = 0, top = 0;
};

Element lookup(const Carrier& c, const std::string& label, std::size_t line) {
  auto it = c.index.find(label);
  if (it == c.index.end()) throw ParseError("unknown element '" + label + "'", line);
  return it->second;
}

Carrier read_carrier(const Sections& secs) {
  Carrier c;
  auto el = secs.find("elements");
  if (el == secs.end()) throw ParseError("missing 'elements:' section", 0);
  for (const auto& line : el->second.lines)
    for (const auto& l : line.tokens) {
      if (l.find_first_of("<,{}:") != std::string::npos)
        throw ParseError("label '" + l + "' contains a reserved character", line.number);
      if (!c.index.emplace(l, static_cast<Element>(c.labels.size())).second)
        throw ParseError("duplicate element '" + l + "'", line.number);
      c.labels.push_back(l);
    }
  if (c.labels.empty()) throw ParseError("no elements", el->second.line);
  if (c.labels.size() > kMaxCarrier) throw ParseError("more than 64 elements", el->second.line);
  const std::size_t n = c.labels.size();

  std::vector<std::pair<Element, Element>> pairs;
  if (auto ord = secs.find("order"); ord != secs.end()) {
    for (const auto& line : ord->second.lines)
      for (const auto& tok : line.tokens) {
        std::vector<std::string> parts;
        std::size_t s = 0;
        while (true) {
          const std::size_t p = tok.find('<', s);
          parts.push_back(tok.substr(s, p == std::string::npos ? std::string::npos : p - s));
          if (p == std::string::npos) break;
          s = p + 1;
        }
        if (parts.size() < 2) throw ParseError("expected 'x<y', got '" + tok + "'", line.number);
        for (std::size_t k = 0; k + 1 < parts.size(); ++k)
          pairs.emplace_back(lookup(c, parts[k], line.number), lookup(c, parts[k + 1], line.number));
      }
  } else if (n > 1) {
    throw ParseError("missing 'order:' section", 0);
  }
  c.leq = order_closure(n, pairs);
  auto is_min = [&](Element x) {
    for (Element y = 0; y < n; ++y)
      if (!c.leq[x * n + y]) return false;
    return true;
  };
  auto is_max = [&](Element x) {
    for (Element y = 0; y < n; ++y)
      if (!c.leq[y * n + x]) return false;
    return true;
  };
  // Without a least/greatest element validation reports the failure.
  c.bot = 0;
  c.top = static_cast<Element>(n - 1);
  for (Element x = 0; x < n; ++x)
    if (is_min(x)) {
      c.bot = x;
      break;
    }
  for (Element x = 0; x < n; ++x)
    if (is_max(x)) {
      c.top = x;
      break;
    }
  return c;
}

Table read_table(const Carrier& c, const Section& sec, const char* name) {
  const std::size_t n = c.labels.size();
  if (sec.lines.size() != n)
    throw ParseError(std::string(name) + " needs " + std::to_string(n) + " rows, found " +
                         std::to_string(sec.lines.size()),
                     sec.line);
  Table t;
  for (const auto& line : sec.lines) {
    if (line.tokens.size() != n)
      throw ParseError(std::string(name) + " row needs " + std::to_string(n) + " entries", line.number);
    for (const auto& tok : line.tokens) t.push_back(lookup(c, tok, line.number));
  }
  return t;
}

void print_header(std::ostringstream& os, const std::vector<std::string>& labels, std::size_t n,
                  const std::vector<std::uint8_t>& leq) {
  os << "elements:";
  for (const auto& l : labels) os << ' ' << l;
  os << "\norder:";
  for (auto [x, y] : covering_pairs(n, leq)) os << ' ' << labels[x] << '<' << labels[y];
  os << '\n';
}

void print_table(std::ostringstream& os, const ResiduatedLattice& a, const Table& t) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) os << (j ? " " : "") << a.label(t[i * n + j]);
    os << '\n';
  }
}

}  // namespace

RawAlgebra parse_rlat_raw(std::string_view text) {
  const Sections secs = split_sections(text, {"elements", "order", "odot", "imp"});
  Carrier c = read_carrier(secs);
  RawAlgebra raw;
  raw.labels = c.labels;
  raw.leq = c.leq;
  raw.bot = c.bot;
  raw.top = c.top;
  auto od = secs.find("odot");
  if (od == secs.end()) throw ParseError("missing 'odot:' section", 0);
  raw.odot = read_table(c, od->second, "odot");
  auto im = secs.find("imp");
  if (im == secs.end()) throw ParseError("missing 'imp:' section", 0);
  const auto& lines = im->second.lines;
  const bool derive = lines.size() == 1 && lines[0].tokens.size() == 1 && lines[0].tokens[0] == "derive" &&
                      !(c.labels.size() == 1 && c.labels[0] == "derive");
  if (!derive) raw.imp = read_table(c, im->second, "imp");
  return raw;
}

ResiduatedLattice parse_rlat(std::string_view text) { return validate(parse_rlat_raw(text)); }

std::string print_rlat(const ResiduatedLattice& a) {
  std::ostringstream os;
  print_header(os, a.labels(), a.size(), a.leq_matrix());
  os << "odot:\n";
  print_table(os, a, a.odot_table());
  os << "imp:\n";
  print_table(os, a, a.imp_table());
  return os.str();
}

BDLattice parse_blat(std::string_view text) {
  const Sections secs = split_sections(text, {"elements", "order"});
  Carrier c = read_carrier(secs);
  RawLattice raw;
  raw.labels = c.labels;
  raw.leq = c.leq;
  raw.bot = c.bot;
  raw.top = c.top;
  return validate_bdl(raw);
}

std::string print_blat(const BDLattice& l) {
  std::ostringstream os;
  print_header(os, l.labels(), l.size(), l.leq_matrix());
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << contents;
}

std::string format_subset(const std::vector<std::string>& labels, Subset s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    if (!first) out += ",";
    out += labels[x];
    first = false;
  }
  return out + "}";
}

Subset parse_label_list(const std::vector<std::string>& labels, std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '{') s.erase(0, 1);
  if (!s.empty() && s.back() == '}') s.pop_back();
  Subset out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    std::string tok = s.substr(start, comma - start);
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    tok = b == std::string::npos ? "" : tok.substr(b, e - b + 1);
    if (!tok.empty()) {
      bool found = false;
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == tok) {
          out.insert(static_cast<Element>(i));
          found = true;
        }
      if (!found) throw ParseError("unknown element '" + tok + "'", 0);
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace rlx

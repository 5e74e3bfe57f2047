#include "rlx/formula.hpp"

#include <cctype>
#include <optional>
#include <regex>

namespace rlx {

namespace {

enum class Tok { Ident, Number, LParen, RParen, Or, And, AndAnd, Star, Arrow, Biarrow, Bang, Caret, Eq, Dot, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
    if (starts("<->")) {
      out.push_back({Tok::Biarrow, "<->", start});
      i += 3;
    } else if (starts("->")) {
      out.push_back({Tok::Arrow, "->", start});
      i += 2;
    } else if (starts("&&")) {
      out.push_back({Tok::AndAnd, "&&", start});
      i += 2;
    } else {
      Tok k;
      switch (c) {
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case '|': k = Tok::Or; break;
        case '&': k = Tok::And; break;
        case '*': k = Tok::Star; break;
        case '!': k = Tok::Bang; break;
        case '^': k = Tok::Caret; break;
        case '=': k = Tok::Eq; break;
        case '.': k = Tok::Dot; break;
        default: throw SyntaxError(std::string("unexpected character '") + c + "'", start);
      }
      out.push_back({k, std::string(1, c), start});
      ++i;
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool is_witness_name(const std::string& name) {
  static const std::regex re("w[0-9]*");
  return std::regex_match(name, re);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Formula run() {
    if (peek().kind == Tok::Ident && peek().text == "exists") {
      while (peek().kind == Tok::Ident && peek().text == "exists") {
        next();
        if (peek().kind != Tok::Ident) throw SyntaxError("expected witness name after 'exists'", peek().pos);
        while (peek().kind == Tok::Ident && peek().text != "exists") {
          const Token t = next();
          for (const auto& b : f_.bound_vars)
            if (b == t.text) throw SyntaxError("witness '" + t.text + "' declared twice", t.pos);
          f_.bound_vars.push_back(t.text);
        }
      }
      expect(Tok::Dot, "'.'");
    }
    do {
      const int l = term();
      expect(Tok::Eq, "'='");
      const int r = term();
      f_.equations.emplace_back(l, r);
    } while (accept(Tok::AndAnd));
    if (peek().kind != Tok::End) throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
    return std::move(f_);
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token next() { return toks_[i_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++i_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) throw SyntaxError(std::string("expected ") + what, peek().pos);
  }

  int add(TermOp op, int lhs = -1, int rhs = -1, unsigned value = 0) {
    f_.nodes.push_back({op, lhs, rhs, value});
    return static_cast<int>(f_.nodes.size()) - 1;
  }

  int term() {
    int l = implication();
    while (accept(Tok::Biarrow)) l = add(TermOp::Biresiduum, l, implication());
    return l;
  }
  int implication() {
    const int l = disjunction();
    if (accept(Tok::Arrow)) return add(TermOp::Imp, l, implication());
    return l;
  }
  int disjunction() {
    int l = conjunction();
    while (accept(Tok::Or)) l = add(TermOp::Join, l, conjunction());
    return l;
  }
  int conjunction() {
    int l = product();
    while (accept(Tok::And)) l = add(TermOp::Meet, l, product());
    return l;
  }
  int product() {
    int l = unary();
    while (accept(Tok::Star)) l = add(TermOp::Odot, l, unary());
    return l;
  }
  int unary() {
    if (accept(Tok::Bang)) return add(TermOp::Neg, unary());
    return postfix();
  }
  int postfix() {
    int t = atom();
    while (accept(Tok::Caret)) {
      const Token k = peek();
      if (k.kind != Tok::Number) throw SyntaxError("expected exponent", k.pos);
      next();
      if (k.text.size() > 2 || std::stoul(k.text) > kMaxExponent)
        throw SyntaxError("exponent larger than " + std::to_string(kMaxExponent), k.pos);
      t = add(TermOp::Pow, t, -1, static_cast<unsigned>(std::stoul(k.text)));
    }
    return t;
  }
  int atom() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        next();
        const int inner = term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Number:
        next();
        if (t.text == "0") return add(TermOp::Zero);
        if (t.text == "1") return add(TermOp::One);
        throw SyntaxError("only the constants 0 and 1 are allowed", t.pos);
      case Tok::Ident:
        next();
        return variable(t);
      default:
        throw SyntaxError(t.kind == Tok::End ? "unexpected end of formula" : "unexpected '" + t.text + "'", t.pos);
    }
  }
  int variable(const Token& t) {
    if (t.text == "exists") throw SyntaxError("'exists' must open the formula", t.pos);
    for (std::size_t k = 0; k < f_.bound_vars.size(); ++k)
      if (f_.bound_vars[k] == t.text) return add(TermOp::Bound, -1, -1, static_cast<unsigned>(k));
    if (is_witness_name(t.text)) throw UnboundVariable(t.text);
    if (f_.free_var.empty()) f_.free_var = t.text;
    if (f_.free_var != t.text) throw MultipleFreeVariables(f_.free_var, t.text);
    return add(TermOp::Free);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  Formula f_;
};

int precedence(TermOp op) {
  switch (op) {
    case TermOp::Biresiduum: return 1;
    case TermOp::Imp: return 2;
    case TermOp::Join: return 3;
    case TermOp::Meet: return 4;
    case TermOp::Odot: return 5;
    case TermOp::Neg: return 6;
    case TermOp::Pow: return 7;
    default: return 8;
  }
}

const char* symbol(TermOp op) {
  switch (op) {
    case TermOp::Biresiduum: return " <-> ";
    case TermOp::Imp: return " -> ";
    case TermOp::Join: return " | ";
    case TermOp::Meet: return " & ";
    case TermOp::Odot: return " * ";
    default: return "";
  }
}

bool same_term(const Formula& a, int i, const Formula& b, int j) {
  const TermNode& x = a.nodes[static_cast<std::size_t>(i)];
  const TermNode& y = b.nodes[static_cast<std::size_t>(j)];
  if (x.op != y.op || x.value != y.value) return false;
  if ((x.lhs < 0) != (y.lhs < 0) || (x.rhs < 0) != (y.rhs < 0)) return false;
  if (x.lhs >= 0 && !same_term(a, x.lhs, b, y.lhs)) return false;
  if (x.rhs >= 0 && !same_term(a, x.rhs, b, y.rhs)) return false;
  return true;
}

}  // namespace

bool Formula::uses_residuation() const {
  for (const auto& n : nodes)
    if (n.op == TermOp::Imp || n.op == TermOp::Neg || n.op == TermOp::Biresiduum) return true;
  return false;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.free_var != b.free_var || a.bound_vars != b.bound_vars || a.equations.size() != b.equations.size())
    return false;
  for (std::size_t k = 0; k < a.equations.size(); ++k)
    if (!same_term(a, a.equations[k].first, b, b.equations[k].first) ||
        !same_term(a, a.equations[k].second, b, b.equations[k].second))
      return false;
  return true;
}

Formula parse_formula(std::string_view text) { return Parser(text).run(); }

std::string print_term(const Formula& f, int node) {
  const TermNode& t = f.nodes[static_cast<std::size_t>(node)];
  const int p = precedence(t.op);
  auto child = [&](int k, bool strict) {
    const int q = precedence(f.nodes[static_cast<std::size_t>(k)].op);
    std::string s = print_term(f, k);
    return (strict ? q <= p : q < p) ? "(" + s + ")" : s;
  };
  switch (t.op) {
    case TermOp::Free: return f.free_var;
    case TermOp::Bound: return f.bound_vars[t.value];
    case TermOp::Zero: return "0";
    case TermOp::One: return "1";
    case TermOp::Neg: return "!" + child(t.lhs, false);
    case TermOp::Pow: return child(t.lhs, false) + "^" + std::to_string(t.value);
    case TermOp::Imp: return child(t.lhs, true) + symbol(t.op) + child(t.rhs, false);
    default: return child(t.lhs, false) + symbol(t.op) + child(t.rhs, true);
  }
}

std::string print_formula(const Formula& f) {
  std::string out;
  if (!f.bound_vars.empty()) {
    out = "exists";
    for (const auto& b : f.bound_vars) out += " " + b;
    out += " . ";
  }
  for (std::size_t k = 0; k < f.equations.size(); ++k) {
    if (k) out += " && ";
    out += print_term(f, f.equations[k].first) + " = " + print_term(f, f.equations[k].second);
  }
  return out;
}

const Formula& blp_formula() {
  static const Formula f = parse_formula("v | !v = 1");
  return f;
}

const Formula& ilp_formula() {
  static const Formula f = parse_formula("v^2 = v");
  return f;
}

const Formula& rlp_formula() {
  static const Formula f = parse_formula("v = !!v");
  return f;
}

const Formula& lattice_boolean_formula() {
  static const Formula f = parse_formula("exists w . v | w = 1 && v & w = 0");
  return f;
}

}  // namespace rlx

#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rlx/error.hpp"
#include "rlx/subset.hpp"

namespace rlx {

enum class TermOp : std::uint8_t { Free, Bound, Zero, One, Join, Meet, Odot, Imp, Neg, Biresiduum, Pow };

struct TermNode {
  TermOp op = TermOp::Zero;
  int lhs = -1;
  int rhs = -1;
  /// Bound-variable index for Bound, exponent for Pow.
  unsigned value = 0;
};

inline constexpr unsigned kMaxExponent = 31;

/// `exists w1 ... wn . t1 = s1 && ... && tk = sk` with at most one free
/// variable. Terms live in a flat arena; equations refer to node indices.
struct Formula {
  std::string free_var;  // empty when the formula has no free variable
  std::vector<std::string> bound_vars;
  std::vector<TermNode> nodes;
  std::vector<std::pair<int, int>> equations;

  bool is_atomic() const { return bound_vars.empty() && equations.size() == 1; }
  /// True when ->, ! or <-> occurs (not interpretable on plain lattices).
  bool uses_residuation() const;
};

/// Structural equality (arena layout is ignored).
bool operator==(const Formula& a, const Formula& b);

/// Grammar, loosest binding first: `<->`, `->` (right assoc), `|`, `&`, `*`,
/// prefix `!`, postfix `^k` (0 <= k <= 31); atoms are identifiers, 0, 1 and
/// parenthesized terms. Identifiers `w` and `w<digits>` name witnesses and
/// must be bound by `exists`; any other identifier is the free variable.
/// Throws SyntaxError, UnboundVariable, MultipleFreeVariables.
Formula parse_formula(std::string_view text);

std::string print_formula(const Formula& f);
std::string print_term(const Formula& f, int node);

const Formula& blp_formula();
const Formula& ilp_formula();
const Formula& rlp_formula();
const Formula& lattice_boolean_formula();

template <class S>
concept LatticeSignature = requires(const S& s, Element a, Element b) {
  { s.size() } -> std::convertible_to<std::size_t>;
  { s.join(a, b) } -> std::convertible_to<Element>;
  { s.meet(a, b) } -> std::convertible_to<Element>;
  { s.bot() } -> std::convertible_to<Element>;
  { s.top() } -> std::convertible_to<Element>;
};

template <class S>
concept ResiduatedSignature = LatticeSignature<S> && requires(const S& s, Element a, Element b) {
  { s.odot(a, b) } -> std::convertible_to<Element>;
  { s.imp(a, b) } -> std::convertible_to<Element>;
};

/// Value of a term. On lattices * is meet and x^k is x (k >= 1); the
/// residuation connectives raise InvalidArgument there.
template <LatticeSignature S>
Element eval_term(const S& s, const Formula& f, int node, Element v, const std::vector<Element>& w) {
  const TermNode& t = f.nodes[static_cast<std::size_t>(node)];
  auto sub = [&](int k) { return eval_term(s, f, k, v, w); };
  auto odot = [&](Element a, Element b) {
    if constexpr (ResiduatedSignature<S>)
      return static_cast<Element>(s.odot(a, b));
    else
      return static_cast<Element>(s.meet(a, b));
  };
  auto imp = [&](Element a, Element b) -> Element {
    if constexpr (ResiduatedSignature<S>)
      return s.imp(a, b);
    else
      throw InvalidArgument("residuation connective evaluated on a lattice");
  };
  switch (t.op) {
    case TermOp::Free: return v;
    case TermOp::Bound: return w[t.value];
    case TermOp::Zero: return s.bot();
    case TermOp::One: return s.top();
    case TermOp::Join: return s.join(sub(t.lhs), sub(t.rhs));
    case TermOp::Meet: return s.meet(sub(t.lhs), sub(t.rhs));
    case TermOp::Odot: return odot(sub(t.lhs), sub(t.rhs));
    case TermOp::Imp: return imp(sub(t.lhs), sub(t.rhs));
    case TermOp::Neg: return imp(sub(t.lhs), s.bot());
    case TermOp::Biresiduum: {
      const Element a = sub(t.lhs), b = sub(t.rhs);
      return s.meet(imp(a, b), imp(b, a));
    }
    case TermOp::Pow: {
      const Element a = sub(t.lhs);
      Element r = s.top();
      for (unsigned i = 0; i < t.value; ++i) r = odot(r, a);
      return r;
    }
  }
  return s.bot();
}

/// Whether the structure satisfies f at v, searching witnesses in id order.
/// On success `witness` (if given) receives the first satisfying assignment.
template <LatticeSignature S>
bool satisfies(const S& s, const Formula& f, Element v, std::vector<Element>* witness = nullptr) {
  const std::size_t k = f.bound_vars.size();
  const Element n = static_cast<Element>(s.size());
  std::vector<Element> w(k, 0);
  while (true) {
    bool ok = true;
    for (auto [l, r] : f.equations)
      if (eval_term(s, f, l, v, w) != eval_term(s, f, r, v, w)) {
        ok = false;
        break;
      }
    if (ok) {
      if (witness) *witness = w;
      return true;
    }
    std::size_t i = 0;
    while (i < k && ++w[i] == n) w[i++] = 0;
    if (i == k) return false;
  }
}

/// {a : s satisfies f(a)}.
template <LatticeSignature S>
Subset definable_set(const S& s, const Formula& f) {
  Subset r;
  for (Element a = 0; a < s.size(); ++a)
    if (satisfies(s, f, a)) r.insert(a);
  return r;
}

}  // namespace rlx

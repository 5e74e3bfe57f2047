#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rlx/subset.hpp"

namespace rlx {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A defining axiom fails; `witness` holds the first failing instance found
/// when scanning elements in id order (unused trailing slots are zero).
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::vector<Element> witness);
  const std::string& axiom() const { return axiom_; }
  const std::vector<Element>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::vector<Element> witness_;
};

/// The set {a : a * b <= c} has no maximum, so no residuum exists.
class NotResiduated : public Error {
 public:
  NotResiduated(Element b, Element c);
  Element b() const { return b_; }
  Element c() const { return c_; }

 private:
  Element b_, c_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

class NotDistributive : public AxiomViolation {
 public:
  explicit NotDistributive(std::vector<Element> witness)
      : AxiomViolation("distributivity", std::move(witness)) {}
};

class NoMinimum : public Error {
 public:
  using Error::Error;
};

class NotGelfand : public Error {
 public:
  using Error::Error;
};

class NotConormal : public Error {
 public:
  using Error::Error;
};

class NoIsomorphism : public Error {
 public:
  using Error::Error;
};

/// Formula text could not be parsed; `position` is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound witness variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class MultipleFreeVariables : public Error {
 public:
  MultipleFreeVariables(const std::string& first, const std::string& second)
      : Error("more than one free variable: '" + first + "' and '" + second + "'") {}
};

class NotAtomic : public Error {
 public:
  using Error::Error;
};

/// Malformed algebra/lattice text file; `line` is 1-based (0 when unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rlx

#include "rlx/error.hpp"

#include <sstream>

namespace rlx {

namespace {

std::string describe_violation(const std::string& axiom, const std::vector<Element>& witness) {
  std::ostringstream os;
  os << "axiom violated: " << axiom << " at (";
  for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? ", " : "") << witness[i];
  os << ")";
  return os.str();
}

}  // namespace

AxiomViolation::AxiomViolation(std::string axiom, std::vector<Element> witness)
    : Error(describe_violation(axiom, witness)), axiom_(std::move(axiom)), witness_(std::move(witness)) {}

NotResiduated::NotResiduated(Element b, Element c)
    : Error("no residuum for (" + std::to_string(b) + ", " + std::to_string(c) + ")"), b_(b), c_(c) {}

SyntaxError::SyntaxError(const std::string& message, std::size_t position)
    : Error("syntax error at offset " + std::to_string(position) + ": " + message), position_(position) {}

ParseError::ParseError(const std::string& message, std::size_t line)
    : Error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

}  // namespace rlx

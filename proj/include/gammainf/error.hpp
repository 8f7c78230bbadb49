#pragma once

#include <stdexcept>
#include <string>

namespace gammainf {

// Every failure mode the kernel can report. Fuel and budget exhaustion are
// first-class outcomes: they are never folded into "false".
enum class Errc {
  // construction / validation
  InvalidName,
  InvalidSort,
  InvalidTerm,
  InvalidContext,
  // parsing
  SyntaxError,
  UnboundName,
  // spec lookups
  NonFunctionalSpec,
  NoAxiom,
  AmbiguousAxiom,
  NoRule,
  AmbiguousRule,
  // typing
  UnboundVariable,
  NotAFunction,
  DomainMismatch,
  IllegalDomain,
  IllegalCodomain,
  TagNotASort,
  NotASort,
  SideConditionViolated,
  TagMismatch,
  PiMismatch,
  NotConvertible,
  SpecMismatch,
  NotDerivable,
  CyclicTags,
  UndeclaredFreeVariable,
  // resources
  FuelExhausted,
  BudgetExhausted,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Conversion ran out of fuel: the answer is unknown, not "no".
class FuelExhaustedError : public Error {
 public:
  explicit FuelExhaustedError(const std::string& message)
      : Error(Errc::FuelExhausted, message) {}
};

// The oracle's derivation search hit one of its caps before deciding.
class BudgetExhaustedError : public Error {
 public:
  explicit BudgetExhaustedError(const std::string& message)
      : Error(Errc::BudgetExhausted, message) {}
};

}  // namespace gammainf

#pragma once

#include <stdexcept>
#include <string>

namespace padicdyn {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero in Q_p") {}
};

struct ZeroHasNoExpansion : Error {
  ZeroHasNoExpansion() : Error("zero has no canonical digit expansion") {}
};

struct OutsideConvergenceDomain : Error {
  explicit OutsideConvergenceDomain(const std::string& what)
      : Error("outside convergence domain: " + what) {}
};

struct NotAUnit : Error {
  explicit NotAUnit(const std::string& what) : Error("not a p-adic unit: " + what) {}
};

struct NotARootModP : Error {
  NotARootModP() : Error("initial residue is not a root mod p") {}
};

struct SingularRootModP : Error {
  SingularRootModP() : Error("residue is a singular root mod p, cannot Hensel-lift") {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error("budget exceeded: " + what) {}
};

struct UnresolvedMultipleRoot : Error {
  explicit UnresolvedMultipleRoot(const std::string& what)
      : Error("unresolved multiple root: " + what) {}
};

struct HypothesisViolated : Error {
  explicit HypothesisViolated(const std::string& what)
      : Error("hypothesis violated: " + what) {}
};

struct SingularInput : Error {
  SingularInput() : Error("map evaluated at its pole") {}
};

struct WrongResidueClassModThree : Error {
  WrongResidueClassModThree()
      : Error("p is not congruent to 2 mod 3; classification unavailable") {}
};

struct WrongRegion : Error {
  explicit WrongRegion(const std::string& what) : Error("point in wrong region: " + what) {}
};

struct AtRepeller : Error {
  AtRepeller() : Error("point coincides with the repelling fixed point") {}
};

struct CoverageUnreachable : Error {
  explicit CoverageUnreachable(const std::string& what)
      : Error("region coverage unreachable: " + what) {}
};

struct GuardViolated : Error {
  explicit GuardViolated(const std::string& what) : Error("case guard violated: " + what) {}
};

struct DenominatorVanishes : Error {
  explicit DenominatorVanishes(const std::string& what)
      : Error("denominator valuation too large: " + what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("bad p-adic literal: " + what) {}
};

}  // namespace padicdyn

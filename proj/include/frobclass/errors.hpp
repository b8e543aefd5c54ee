#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobclass {

enum class Errc {
  InvalidInput,
  NonPrime,
  ReducibleModulus,
  DegreeMismatch,
  BadPower,
  NotRootOfUnity,
  BadOrder,
  ZeroPolynomial,
  ZeroResidue,
  Reducible,
  NonMonic,
  NotAFactor,
  ReducibleResiduePoly,
  DenominatorDividesP,
  SingularCurve,
  OffCurve,
  OddPrimeRequired,
  SizeBound,
  BoundExceeded,
  NotTorsionField,
  DependentPoints,
  NotABasis,
  NotConjugate,
  NotTorsion,
  DegenerateAfterRetries,
  OrderMismatch,
  Singular,
  NotSL2,
  NotSLn,
  ScaleBound,
  DimensionMismatch,
  BadReduction,
  HypothesisViolated,
  Inconclusive,
  Ambiguous,
  AuditFailed,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace frobclass

#include "frobclass/errors.hpp"

namespace frobclass {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NonPrime: return "NonPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::BadPower: return "BadPower";
    case Errc::NotRootOfUnity: return "NotRootOfUnity";
    case Errc::BadOrder: return "BadOrder";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ZeroResidue: return "ZeroResidue";
    case Errc::Reducible: return "Reducible";
    case Errc::NonMonic: return "NonMonic";
    case Errc::NotAFactor: return "NotAFactor";
    case Errc::ReducibleResiduePoly: return "ReducibleResiduePoly";
    case Errc::DenominatorDividesP: return "DenominatorDividesP";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::OffCurve: return "OffCurve";
    case Errc::OddPrimeRequired: return "OddPrimeRequired";
    case Errc::SizeBound: return "SizeBound";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::NotTorsionField: return "NotTorsionField";
    case Errc::DependentPoints: return "DependentPoints";
    case Errc::NotABasis: return "NotABasis";
    case Errc::NotConjugate: return "NotConjugate";
    case Errc::NotTorsion: return "NotTorsion";
    case Errc::DegenerateAfterRetries: return "DegenerateAfterRetries";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::Singular: return "Singular";
    case Errc::NotSL2: return "NotSL2";
    case Errc::NotSLn: return "NotSLn";
    case Errc::ScaleBound: return "ScaleBound";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BadReduction: return "BadReduction";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::Inconclusive: return "Inconclusive";
    case Errc::Ambiguous: return "Ambiguous";
    case Errc::AuditFailed: return "AuditFailed";
  }
  return "Unknown";
}

}  // namespace frobclass

#include "frobclass/golden.hpp"

namespace frobclass::golden {

using classify::ClassificationJob;
using nf::NfElem;
using nf::NumberField;
using nf::Rational;

ClassificationJob zeta3_job(bool with_basis) {
  ClassificationJob j;
  j.field = NumberField::create({1, 1, 1});
  j.curve = {NfElem::from_int(j.field, 1), NfElem::from_int(j.field, 1)};
  j.l = 3;
  j.prime = nf::prime_datum(j.field, 13, {-3, 1});
  j.global = nf::GlobalPairingDatum::from_value(NfElem::alpha(j.field), 3);
  j.mode = classify::Mode::Thm1;
  j.torsion_modulus = std::vector<int64_t>{-2, 2, 0, 1};
  if (with_basis) j.basis = classify::ExplicitBasis{{10}, {6}, {3, -1, 8}, {-1, 4, 7}};
  return j;
}

ClassificationJob sqrt5_job(bool with_basis) {
  ClassificationJob j;
  j.field = NumberField::create({-5, 0, 1});
  auto c = [&](int64_t v) { return NfElem::from_int(j.field, v); };
  j.curve = {c(0), c(-1), c(1), c(0), c(0)};
  j.l = 5;
  j.prime = nf::prime_datum(j.field, 31, {-6, 1});
  j.global = nf::GlobalPairingDatum::from_minpoly({c(1), NfElem(j.field, {Rational(1, 2), Rational(-1, 2)}), c(1)}, 5);
  j.mode = classify::Mode::Thm2;
  j.subgroup_hypothesis_asserted = true;
  j.torsion_modulus = std::vector<int64_t>{28, 7, 0, 0, 0, 1};
  if (with_basis) j.basis = classify::ExplicitBasis{{1}, {-1}, {12, 23, 8, 26}, {2, 17, 29, 17, 16}};
  return j;
}

}  // namespace frobclass::golden

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobclass/classify.hpp"
#include "frobclass/pairing.hpp"

namespace frobclass::selftest {

struct SuiteResult {
  std::string name;
  size_t checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

struct Options {
  uint64_t seed = ff::kDefaultSeed;
  pairing::PairingFn pair = pairing::default_pairing;
  // Multiplies the number of random trials.
  int scale = 1;
};

// A deliberately broken pairing: returns -e(P, Q).
pairing::PairingFn faulty_pairing_sign();

SuiteResult ff_suite(const Options& o);
SuiteResult ec_suite(const Options& o);
SuiteResult pairing_suite(const Options& o);
SuiteResult conj_suite(const Options& o);
SuiteResult classify_suite(const Options& o);
std::vector<SuiteResult> run_all(const Options& o);

// Curve over F_p (p = 1 mod l) with an l-torsion field of small degree > 1,
// plus a torsion basis: the fixtures of the pairing law trials.
struct PairingFixture {
  uint64_t l = 0;
  ec::TorsionBasis basis;
};
PairingFixture pairing_fixture(uint64_t l, uint64_t seed, const pairing::PairingFn& pair = pairing::default_pairing);

struct LawStats {
  size_t trials = 0;
  size_t violations = 0;
  std::vector<std::string> examples;  // first few violations
};
// Bilinearity, alternation, Galois equivariance and the determinant law on
// random points of the fixtures for the given l values.
LawStats pairing_laws(const std::vector<uint64_t>& ls, size_t trials, uint64_t seed,
                      const pairing::PairingFn& pair = pairing::default_pairing);

struct OracleStats {
  size_t instances = 0;
  size_t agree = 0;
  std::vector<std::string> examples;
};
// Pairing pipeline against brute force on seeded split instances.
OracleStats oracle_equivalence(uint64_t l, size_t instances, uint64_t seed,
                               const pairing::PairingFn& pair = pairing::default_pairing);
// Replacing the global value by a non-square power flips the verdict.
OracleStats nonsquare_flip(const std::vector<uint64_t>& ls, size_t instances, uint64_t seed);

struct ConjStats {
  size_t checks = 0;
  std::vector<std::string> failures;
};
// class_splits against the centralizer computation on all of SL_2(F_l), the
// class-size partition and splitting data on split classes.
ConjStats conj_exhaustive(uint64_t l);
// n = 3, l = 7 regular unipotent: (m, H) = (3, {1, 6}).
ConjStats conj_n3_unipotent();

}  // namespace frobclass::selftest

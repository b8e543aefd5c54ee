#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobclass/conj.hpp"
#include "frobclass/ec.hpp"
#include "frobclass/pairing.hpp"

namespace frobclass::ec {

enum class RationalTorsion { None, Partial, Full };
std::string to_string(RationalTorsion r);

// One monic irreducible factor g of psi_l over the base field F_q. The roots
// of g live in F_{q^d}; the matching y-coordinates lie there too exactly when
// rhs(x)^((q^d - 1)/2) = 1 in F_q[x]/(g).
struct TorsionFactor {
  Poly g;
  int degree = 0;
  bool y_rational = false;
};

struct TorsionAnalysis {
  uint64_t l = 0;
  std::vector<TorsionFactor> factors;
  // Least k with E[l] inside E(F_{q^k}).
  int field_degree = 0;
};

TorsionAnalysis analyze_torsion(const Curve& e, uint64_t l, uint64_t seed = ff::kDefaultSeed);
int torsion_field_degree(const Curve& e, uint64_t l, uint64_t seed = ff::kDefaultSeed);
RationalTorsion rational_torsion_check(const Curve& e, uint64_t l, uint64_t seed = ff::kDefaultSeed);

// The curve over F_{q^k}, realised as a degree f*k extension of F_p together
// with the embedding of F_q = F_{p^f}.
struct TorsionField {
  Curve base_curve;
  Curve curve;
  ff::Embedding embed;
  uint64_t q = 0;
  int k = 0;
  const ff::Field& ext() const { return curve.field(); }
};

// Builds F_{q^k}. An explicit modulus (over F_p, degree f*k) is validated;
// otherwise one is found by seeded search.
TorsionField make_torsion_field(const Curve& e, int k, std::optional<std::vector<uint64_t>> modulus = {},
                                uint64_t seed = ff::kDefaultSeed);

// All l^2 - 1 nonzero l-torsion points over the torsion field, sorted.
// Throws NotTorsionField if some are not defined there.
std::vector<Point> torsion_points(const TorsionField& tf, uint64_t l, uint64_t seed = ff::kDefaultSeed);

struct TorsionBasis {
  uint64_t l = 0;
  TorsionField tf;
  Point q1, q2;
  Elem zeta;  // <Q1, Q2>_l
};

// Seeded choice of Q1 among the nonzero torsion and Q2 outside <Q1>.
TorsionBasis torsion_basis(const TorsionField& tf, uint64_t l, uint64_t seed = ff::kDefaultSeed,
                           const pairing::PairingFn& pair = pairing::default_pairing);
// Validates an explicit pair (points on tf.curve); throws NotABasis or
// DependentPoints.
TorsionBasis make_basis(const TorsionField& tf, uint64_t l, const Point& q1, const Point& q2,
                        uint64_t seed = ff::kDefaultSeed, const pairing::PairingFn& pair = pairing::default_pairing);

// Table a Q1 + b Q2 for all a, b in [0, l), indexed a * l + b.
std::vector<Point> span_table(const TorsionBasis& b);
// Coordinates (a, b) of p in the basis; throws NotABasis if p is not in the span.
std::pair<uint64_t, uint64_t> coordinates(const TorsionBasis& b, const std::vector<Point>& table, const Point& p);

Point frobenius(const TorsionField& tf, const Point& p);

// Matrix of x -> x^q on E[l]: column j holds the coordinates of phi(Q_j).
conj::Matrix frobenius_matrix(const TorsionBasis& b);

// New basis (Q1, Q2) C for the first C (lexicographic) with M C = C sigma;
// the returned basis has Frobenius matrix sigma (checked). The pairing value
// is recomputed. Throws NotConjugate.
TorsionBasis basis_for_representative(const TorsionBasis& b, const conj::Matrix& m, const conj::Matrix& sigma,
                                      conj::Matrix* used = nullptr, uint64_t seed = ff::kDefaultSeed,
                                      const pairing::PairingFn& pair = pairing::default_pairing);
// (Q1, Q2) C for a given C.
TorsionBasis transform_basis(const TorsionBasis& b, const conj::Matrix& c, uint64_t seed = ff::kDefaultSeed,
                             const pairing::PairingFn& pair = pairing::default_pairing);

}  // namespace frobclass::ec

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frobclass/ff.hpp"
#include "frobclass/poly.hpp"

namespace frobclass::nf {

// Reduced fraction with word-sized parts; overflow raises SizeBound.
class Rational {
 public:
  Rational(int64_t n = 0) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(int64_t n, int64_t d);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  // "n" or "n/d"; parse accepts the same forms.
  std::string to_string() const;
  static Rational parse(const std::string& s);

 private:
  static Rational make(__int128 n, __int128 d);
  int64_t num_, den_;
};

// Q(alpha) with alpha a root of a monic irreducible integer polynomial.
class NumberField {
 public:
  NumberField() = default;
  // Little-endian integer coefficients. Throws NonMonic, Reducible, SizeBound.
  static NumberField create(const std::vector<int64_t>& minpoly);

  int degree() const { return static_cast<int>(d_->minpoly.size()) - 1; }
  const std::vector<int64_t>& minpoly() const { return d_->minpoly; }
  bool valid() const { return d_ != nullptr; }
  std::string describe() const;

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.d_ == b.d_ || (a.d_ && b.d_ && a.d_->minpoly == b.d_->minpoly);
  }

 private:
  struct Data {
    std::vector<int64_t> minpoly;
  };
  std::shared_ptr<const Data> d_;
};

// Irreducibility of a monic integer polynomial over Q: rational roots, then
// factor-degree patterns modulo many primes, then Kronecker's method on the
// candidate degrees that survive. SizeBound if the search would be too large.
bool is_irreducible_over_q(const std::vector<int64_t>& f);

class NfElem {
 public:
  NfElem() = default;
  // Coefficients in powers of alpha; longer inputs are reduced mod minpoly.
  NfElem(NumberField f, std::vector<Rational> coeffs);
  static NfElem from_int(const NumberField& f, int64_t v);
  static NfElem alpha(const NumberField& f);

  const NumberField& field() const { return f_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  NfElem operator+(const NfElem& o) const;
  NfElem operator-(const NfElem& o) const;
  NfElem operator*(const NfElem& o) const;
  NfElem operator-() const;
  NfElem pow(uint64_t e) const;

  friend bool operator==(const NfElem& a, const NfElem& b) { return a.c_ == b.c_; }

  // e.g. "1/2 - 1/2*a"
  std::string to_string(char var = 'a') const;

 private:
  NumberField f_;
  std::vector<Rational> c_;
};

// A degree-f prime of F above p, given as a monic irreducible factor g of the
// minimal polynomial mod p. Residue field F_p[x]/(g); alpha maps to x mod g.
struct PrimeDatum {
  NumberField field;
  uint64_t p = 0;
  std::vector<uint64_t> g;
  ff::Field residue;
  ff::Elem alpha_image;
  int f = 1;
  uint64_t q = 0;
};

// Throws NonPrime, NonMonic, NotAFactor, ReducibleResiduePoly.
PrimeDatum prime_datum(const NumberField& field, uint64_t p, const std::vector<int64_t>& g);

// Throws DenominatorDividesP.
ff::Elem reduce_element(const NfElem& e, const PrimeDatum& pd);
ff::Poly reduce_poly(const std::vector<NfElem>& coeffs, const PrimeDatum& pd);
ff::Elem reduce_rational(const Rational& r, const PrimeDatum& pd);

// The global Weil pairing <P1, P2>_l: an element of F (needs zeta_l in F) or
// its minimal polynomial over F (little-endian, monic).
struct GlobalPairingDatum {
  std::optional<NfElem> value;
  std::optional<std::vector<NfElem>> minpoly;

  // Checks value^l = 1 and value != 1 (NotRootOfUnity).
  static GlobalPairingDatum from_value(const NfElem& v, uint64_t l);
  // Checks monic and deg | l - 1.
  static GlobalPairingDatum from_minpoly(const std::vector<NfElem>& m, uint64_t l);
  bool is_value() const { return value.has_value(); }
  std::string to_string() const;
};

// Product of (x - z^s) over s in S, with z a primitive l-th root of unity in
// the residue field of pd: the reduced minimal polynomial assembled from a
// Galois-orbit exponent set.
ff::Poly orbit_polynomial(const ff::Elem& zeta, const std::vector<uint64_t>& exponents);

}  // namespace frobclass::nf

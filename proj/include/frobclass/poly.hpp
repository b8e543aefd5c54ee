#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "frobclass/ff.hpp"

namespace frobclass::ff {

// Dense univariate polynomial over a Field. Coefficients are stored
// little-endian as a flat array of k-word field elements; the leading
// coefficient is always nonzero (the zero polynomial is empty).
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : f_(std::move(f)) {}
  Poly(Field f, const std::vector<Elem>& coeffs);

  // Coefficients given as reduced residues of the prime field.
  static Poly from_residues(const Field& f, std::span<const uint64_t> coeffs);
  static Poly from_signed(const Field& f, std::span<const int64_t> coeffs);
  static Poly constant(const Elem& c);
  static Poly monomial(const Elem& c, size_t degree);
  static Poly x(const Field& f) { return monomial(f.one(), 1); }

  const Field& field() const { return f_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  size_t size() const { return f_.valid() ? c_.size() / static_cast<size_t>(f_.degree()) : 0; }
  Elem coeff(size_t i) const;
  Elem lead() const { return coeff(size() - 1); }
  std::vector<Elem> coeffs() const;
  // Only meaningful when every coefficient lies in the prime field.
  std::vector<uint64_t> residues() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Elem& s) const;
  Poly operator%(const Poly& m) const { return divrem(m).second; }
  Poly operator/(const Poly& m) const { return divrem(m).first; }
  std::pair<Poly, Poly> divrem(const Poly& m) const;

  Poly monic() const;
  Poly derivative() const;
  Elem eval(const Elem& x) const;
  Poly mulmod(const Poly& o, const Poly& m) const { return (*this * o) % m; }
  Poly powmod(const WideUint& e, const Poly& m) const;
  // Same coefficients viewed in another field via a coefficient map.
  template <typename Fn>
  Poly map_coeffs(const Field& target, Fn&& fn) const {
    std::vector<Elem> out;
    out.reserve(size());
    for (size_t i = 0; i < size(); ++i) out.push_back(fn(coeff(i)));
    return Poly(target, out);
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_ && (a.c_.empty() || a.f_ == b.f_); }
  friend bool operator<(const Poly& a, const Poly& b);

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  const uint64_t* raw(size_t i) const { return c_.data() + i * static_cast<size_t>(f_.degree()); }
  uint64_t* raw(size_t i) { return c_.data() + i * static_cast<size_t>(f_.degree()); }

  Field f_;
  std::vector<uint64_t> c_;
};

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// Irreducibility over the coefficient field F_Q: x^{Q^n} = x mod f and
// gcd(x^{Q^i} - x, f) = 1 for 1 <= i <= n/2.
bool is_irreducible(const Poly& f);

// Distinct roots in the coefficient field, sorted. Exhaustive for fields of
// size at most 2^16, otherwise gcd with x^Q - x followed by equal-degree
// splitting. Throws ZeroPolynomial.
std::vector<Elem> poly_roots(const Poly& f, uint64_t seed = kDefaultSeed);

// Factorisation of a squarefree monic polynomial into monic irreducibles,
// grouped by degree (distinct-degree then Cantor-Zassenhaus). Sorted.
std::vector<Poly> factor_squarefree(const Poly& f, std::mt19937_64& rng);
// Splits a monic polynomial whose irreducible factors all have degree d.
std::vector<Poly> equal_degree_factor(const Poly& f, int d, std::mt19937_64& rng);
// A single root of f in its coefficient field, assuming f splits into linear
// factors there; recurses into the smaller half each time.
Elem find_root_split(const Poly& f, std::mt19937_64& rng);

// Random monic irreducible polynomial of degree k over F_p (seeded).
std::vector<uint64_t> random_irreducible(uint64_t p, int k, std::mt19937_64& rng);

}  // namespace frobclass::ff

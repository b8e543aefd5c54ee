#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobclass/ff.hpp"
#include "frobclass/poly.hpp"

namespace frobclass::ec {

using ff::Elem;
using ff::Field;
using ff::Poly;

class Point {
 public:
  Point() = default;  // the point at infinity
  Point(Elem x, Elem y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}
  static Point infinity() { return Point(); }

  bool is_infinity() const { return inf_; }
  const Elem& x() const { return x_; }
  const Elem& y() const { return y_; }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.x_ == b.x_ && a.y_ == b.y_;
  }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.inf_ || b.inf_) return a.inf_ && !b.inf_;
    if (!(a.x_ == b.x_)) return a.x_ < b.x_;
    return a.y_ < b.y_;
  }

  std::string to_string() const;

 private:
  bool inf_ = true;
  Elem x_, y_;
};

// Long Weierstrass coefficients a1, a2, a3, a4, a6.
using LongCoeffs = std::array<Elem, 5>;

// Short Weierstrass curve y^2 = x^3 + a x + b over a field of characteristic
// greater than 3. When built from a long model, the substitution
// X = x + b2/12, Y = y + (a1 x + a3)/2 is kept for converting points.
class Curve {
 public:
  Curve() = default;
  static Curve short_form(const Elem& a, const Elem& b);
  static Curve from_long(const LongCoeffs& a);

  const Field& field() const { return a_.field(); }
  const Elem& a() const { return a_; }
  const Elem& b() const { return b_; }
  // -16(4a^3 + 27b^2).
  Elem discriminant() const;
  bool has_long_model() const { return long_.has_value(); }
  const LongCoeffs& long_coeffs() const { return *long_; }

  // Point conversion between the long model (if any) and this short model.
  Point from_long_point(const Elem& x, const Elem& y) const;
  std::pair<Elem, Elem> to_long_point(const Point& p) const;

  // The same curve over a larger field.
  Curve base_change(const ff::Embedding& emb) const;

  Elem rhs(const Elem& x) const { return (x * x + a_) * x + b_; }
  bool on_curve(const Point& p) const;
  // Throws OffCurve.
  void check(const Point& p) const;

  Point neg(const Point& p) const;
  Point add(const Point& p, const Point& q) const;
  Point dbl(const Point& p) const { return add(p, p); }
  Point mul(const Point& p, int64_t n) const;
  Point mul(const Point& p, const WideUint& n) const;
  // Repeated addition; test oracle for mul.
  Point mul_naive(const Point& p, int64_t n) const;

  // A point with the given x, choosing the square root with the smaller
  // canonical coefficient vector; nullopt when rhs(x) is not a square.
  std::optional<Point> lift_x(const Elem& x) const;
  Point random_point(std::mt19937_64& rng) const;

  std::string to_string() const;

  friend bool operator==(const Curve& c, const Curve& d) { return c.a_ == d.a_ && c.b_ == d.b_; }

 private:
  Elem a_, b_;
  std::optional<LongCoeffs> long_;
  Elem shift_x_;  // b2/12
};

// Short model of a long Weierstrass curve; throws SingularCurve.
Curve short_model(const LongCoeffs& a);

// #E(F_q): exhaustive for q <= 2^16, baby-step giant-step in the Hasse
// interval up to 2^32 (with the quadratic twist as a fallback when a single
// point order does not pin the count). Throws SizeBound beyond that.
uint64_t count_points(const Curve& e, uint64_t seed = ff::kDefaultSeed);
uint64_t count_points_exhaustive(const Curve& e);
uint64_t count_points_bsgs(const Curve& e, uint64_t seed = ff::kDefaultSeed);

// q + 1 - #E as a signed integer, and its residue mod an odd prime l.
int64_t frobenius_trace(const Curve& e, uint64_t count);
uint64_t trace_mod_l(const Curve& e, uint64_t l, uint64_t seed = ff::kDefaultSeed);

// Order of the base field as an integer (throws SizeBound above 2^63).
uint64_t field_size(const Field& f);

// Division polynomials f_n in x alone: psi_n = f_n for odd n and
// psi_n = y f_n for even n, with y^2 replaced by x^3 + ax + b.
class DivisionPolynomials {
 public:
  explicit DivisionPolynomials(const Curve& e);
  const Poly& get(uint64_t n);

 private:
  Curve e_;
  Poly rhs_sq_;  // (x^3 + ax + b)^2
  std::vector<Poly> cache_;
  std::vector<bool> have_;
};

// psi_l for odd l (the x-only polynomial of degree (l^2 - 1) / 2).
Poly division_polynomial(const Curve& e, uint64_t n);

}  // namespace frobclass::ec

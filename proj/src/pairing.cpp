#include "frobclass/pairing.hpp"

#include <random>

namespace frobclass::pairing {

namespace {

// Multiplies num/den by l_{v,w}(t) / v_{v+w}(t) and returns v + w.
Point miller_step(const Curve& e, const Point& v, const Point& w, const Point& t, Elem& num, Elem& den) {
  if (v.is_infinity() || w.is_infinity()) return e.add(v, w);
  if (v.x() == w.x() && (!(v.y() == w.y()) || v.y().is_zero())) {
    // Vertical line through v and -v; the sum is O.
    num *= t.x() - v.x();
    return Point::infinity();
  }
  Elem lambda;
  if (v.x() == w.x())
    lambda = (v.x() * v.x()).scaled(3) + e.a();
  else
    lambda = w.y() - v.y();
  lambda = v.x() == w.x() ? lambda / v.y().scaled(2) : lambda / (w.x() - v.x());
  Elem x3 = lambda * lambda - v.x() - w.x();
  Elem y3 = lambda * (v.x() - x3) - v.y();
  num *= t.y() - v.y() - lambda * (t.x() - v.x());
  den *= t.x() - x3;
  return Point(std::move(x3), std::move(y3));
}

}  // namespace

std::optional<Elem> miller(const Curve& e, const Point& p, uint64_t n, const Point& t) {
  if (t.is_infinity()) return std::nullopt;
  const ff::Field& f = e.field();
  Elem num = f.one(), den = f.one();
  Point v = p;
  int top = 63 - __builtin_clzll(n);
  for (int i = top - 1; i >= 0; --i) {
    num *= num;
    den *= den;
    v = miller_step(e, v, v, t, num, den);
    if ((n >> i) & 1U) v = miller_step(e, v, p, t, num, den);
    if (num.is_zero() || den.is_zero()) return std::nullopt;
  }
  if (!v.is_infinity()) fail(Errc::NotTorsion, "n P != O in Miller loop");
  return num / den;
}

Elem weil_pairing(const Curve& e, const Point& p, const Point& q, uint64_t l, uint64_t seed) {
  e.check(p);
  e.check(q);
  if (!e.mul(p, static_cast<int64_t>(l)).is_infinity()) fail(Errc::NotTorsion, p.to_string() + " is not l-torsion");
  if (!e.mul(q, static_cast<int64_t>(l)).is_infinity()) fail(Errc::NotTorsion, q.to_string() + " is not l-torsion");
  const ff::Field& f = e.field();
  if (p.is_infinity() || q.is_infinity() || p == q) return f.one();
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    const Point s = e.random_point(rng);
    const Point qs = e.add(q, s);
    const Point ps = e.add(p, e.neg(s));
    auto a = miller(e, p, l, qs);
    auto b = miller(e, p, l, s);
    auto c = miller(e, q, l, ps);
    auto d = miller(e, q, l, e.neg(s));
    if (!a || !b || !c || !d) continue;
    Elem r = (*a * *d) / (*b * *c);
    if (!r.pow(l).is_one()) fail(Errc::DegenerateAfterRetries, "pairing value is not an l-th root of unity");
    return r;
  }
  fail(Errc::DegenerateAfterRetries, "every auxiliary point collided with the divisor support");
}

void require_exact_order(const Elem& v, uint64_t l, const char* what) {
  if (v.is_zero() || !v.pow(l).is_one() || v.is_one())
    fail(Errc::OrderMismatch, std::string(what) + " " + v.to_string() + " does not have order " + std::to_string(l));
}

std::optional<uint64_t> pairing_power_exponent(const Elem& global, const Elem& local, uint64_t l,
                                               const ff::ResidueSubgroup& h) {
  if (!(global.field() == local.field())) fail(Errc::OrderMismatch, "pairing values lie in different fields");
  require_exact_order(local, l, "local pairing");
  if (global.is_zero() || !global.pow(l).is_one())
    fail(Errc::OrderMismatch, "global pairing " + global.to_string() + " is not an l-th root of unity");
  const uint64_t e = ff::mu_l_dlog(local, global, l);
  if (e != 0 && h.contains(e)) return e;
  return std::nullopt;
}

bool pairing_power_class(const Elem& global, const Elem& local, uint64_t l, const ff::ResidueSubgroup& h) {
  return pairing_power_exponent(global, local, l, h).has_value();
}

}  // namespace frobclass::pairing

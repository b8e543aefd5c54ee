#include "frobclass/ec.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace frobclass::ec {

std::string Point::to_string() const {
  if (inf_) return "O";
  return "(" + x_.to_string() + ", " + y_.to_string() + ")";
}

Curve Curve::short_form(const Elem& a, const Elem& b) {
  if (!(a.field() == b.field())) fail(Errc::InvalidInput, "curve coefficients lie in different fields");
  if (a.field().characteristic() <= 3) fail(Errc::InvalidInput, "characteristic must exceed 3");
  Curve c;
  c.a_ = a;
  c.b_ = b;
  if (c.discriminant().is_zero()) fail(Errc::SingularCurve, "4a^3 + 27b^2 = 0");
  return c;
}

Curve Curve::from_long(const LongCoeffs& a) {
  const Field& f = a[0].field();
  for (const auto& c : a)
    if (!(c.field() == f)) fail(Errc::InvalidInput, "curve coefficients lie in different fields");
  if (f.characteristic() <= 3) fail(Errc::InvalidInput, "characteristic must exceed 3");
  const Elem &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
  Elem b2 = a1 * a1 + a2.scaled(4);
  Elem b4 = a4.scaled(2) + a1 * a3;
  Elem b6 = a3 * a3 + a6.scaled(4);
  Elem c4 = b2 * b2 - b4.scaled(24);
  Elem c6 = -(b2 * b2 * b2) + (b2 * b4).scaled(36) - b6.scaled(216);
  Curve c = short_form(-c4 / f.from_int(48), -c6 / f.from_int(864));
  c.long_ = a;
  c.shift_x_ = b2 / f.from_int(12);
  return c;
}

Curve short_model(const LongCoeffs& a) { return Curve::from_long(a); }

Elem Curve::discriminant() const {
  Elem t = (a_ * a_ * a_).scaled(4) + (b_ * b_).scaled(27);
  return -t.scaled(16);
}

Point Curve::from_long_point(const Elem& x, const Elem& y) const {
  if (!long_) return Point(x, y);
  const Elem half = field().from_int(2).inv();
  return Point(x + shift_x_, y + ((*long_)[0] * x + (*long_)[2]) * half);
}

std::pair<Elem, Elem> Curve::to_long_point(const Point& p) const {
  if (p.is_infinity()) fail(Errc::InvalidInput, "the point at infinity has no affine coordinates");
  if (!long_) return {p.x(), p.y()};
  const Elem half = field().from_int(2).inv();
  Elem x = p.x() - shift_x_;
  return {x, p.y() - ((*long_)[0] * x + (*long_)[2]) * half};
}

Curve Curve::base_change(const ff::Embedding& emb) const {
  Curve c;
  c.a_ = emb(a_);
  c.b_ = emb(b_);
  if (long_) {
    LongCoeffs l;
    for (size_t i = 0; i < 5; ++i) l[i] = emb((*long_)[i]);
    c.long_ = l;
    c.shift_x_ = emb(shift_x_);
  }
  return c;
}

bool Curve::on_curve(const Point& p) const {
  if (p.is_infinity()) return true;
  if (!(p.x().field() == field()) || !(p.y().field() == field())) return false;
  return p.y() * p.y() == rhs(p.x());
}

void Curve::check(const Point& p) const {
  if (!on_curve(p)) fail(Errc::OffCurve, p.to_string() + " is not on " + to_string());
}

Point Curve::neg(const Point& p) const {
  if (p.is_infinity()) return p;
  return Point(p.x(), -p.y());
}

Point Curve::add(const Point& p, const Point& q) const {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  Elem lambda;
  if (p.x() == q.x()) {
    if (!(p.y() == q.y()) || p.y().is_zero()) return Point::infinity();
    Elem xx = p.x() * p.x();
    lambda = (xx.scaled(3) + a_) / p.y().scaled(2);
  } else {
    lambda = (q.y() - p.y()) / (q.x() - p.x());
  }
  Elem x3 = lambda * lambda - p.x() - q.x();
  Elem y3 = lambda * (p.x() - x3) - p.y();
  return Point(std::move(x3), std::move(y3));
}

Point Curve::mul(const Point& p, int64_t n) const {
  if (n < 0) return neg(mul(p, WideUint(static_cast<uint64_t>(-(n + 1)) + 1)));
  return mul(p, WideUint(static_cast<uint64_t>(n)));
}

Point Curve::mul(const Point& p, const WideUint& n) const {
  Point r;
  for (size_t i = n.bit_length(); i-- > 0;) {
    r = dbl(r);
    if (n.bit(i)) r = add(r, p);
  }
  return r;
}

Point Curve::mul_naive(const Point& p, int64_t n) const {
  Point r;
  const Point step = n < 0 ? neg(p) : p;
  for (int64_t i = 0; i < (n < 0 ? -n : n); ++i) r = add(r, step);
  return r;
}

std::optional<Point> Curve::lift_x(const Elem& x) const {
  std::mt19937_64 rng(ff::kDefaultSeed);
  auto y = ff::sqrt(rhs(x), rng);
  if (!y) return std::nullopt;
  Elem other = -*y;
  return Point(x, other < *y ? other : *y);
}

Point Curve::random_point(std::mt19937_64& rng) const {
  for (;;) {
    auto p = lift_x(field().random(rng));
    if (!p) continue;
    return (rng() & 1) ? neg(*p) : *p;
  }
}

std::string Curve::to_string() const {
  return "y^2 = x^3 + (" + a_.to_string() + ")x + (" + b_.to_string() + ") over " + field().describe();
}

uint64_t field_size(const Field& f) {
  const WideUint& q = f.order();
  if (!q.fits_u64() || q.to_u64() >> 63) fail(Errc::SizeBound, "field too large for point counting");
  return q.to_u64();
}

namespace {

uint64_t elem_index(const Elem& e) {
  const uint64_t p = e.field().characteristic();
  uint64_t idx = 0;
  const auto& c = e.coeffs();
  for (size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
  return idx;
}

uint64_t isqrt_floor(uint64_t n) {
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Exact order of p given a multiple n of it.
uint64_t order_from_multiple(const Curve& e, const Point& p, uint64_t n) {
  for (uint64_t r : prime_factors(n)) {
    while (n % r == 0 && e.mul(p, WideUint(n / r)).is_infinity()) n /= r;
  }
  return n;
}

// Some N in [lo, hi] with N P = O, by baby-step giant-step; 0 if none.
uint64_t annihilator_in_interval(const Curve& e, const Point& p, uint64_t lo, uint64_t hi) {
  const uint64_t width = hi - lo + 1;
  const uint64_t m = isqrt_floor(width) + 1;
  std::map<Point, uint64_t> baby;
  Point jp;
  for (uint64_t j = 0; j < m; ++j) {
    baby.emplace(e.neg(jp), j);
    jp = e.add(jp, p);
  }
  const Point giant = e.mul(p, WideUint(m));
  Point t = e.mul(p, WideUint(lo));
  for (uint64_t i = 0; i * m < width; ++i) {
    auto it = baby.find(t);
    if (it != baby.end()) {
      uint64_t n = lo + i * m + it->second;
      if (n <= hi && n > 0) return n;
    }
    t = e.add(t, giant);
  }
  return 0;
}

// Lcm of orders of a few random points, or 0 when some point order cannot
// be matched (never for a genuine curve).
uint64_t point_order_lcm(const Curve& e, uint64_t lo, uint64_t hi, int points, std::mt19937_64& rng) {
  uint64_t l = 1;
  for (int i = 0; i < points; ++i) {
    Point p = e.random_point(rng);
    uint64_t n = annihilator_in_interval(e, p, lo, hi);
    if (n == 0) return 0;
    uint64_t o = order_from_multiple(e, p, n);
    l = std::lcm(l, o);
  }
  return l;
}

}  // namespace

uint64_t count_points_exhaustive(const Curve& e) {
  const Field& f = e.field();
  const uint64_t q = field_size(f);
  if (q > (1ULL << 24)) fail(Errc::SizeBound, "exhaustive count limited to small fields");
  std::vector<uint8_t> is_sq(q, 0);
  for (uint64_t i = 0; i < q; ++i) {
    Elem y = f.from_index(i);
    is_sq[elem_index(y * y)] = 1;
  }
  uint64_t n = 1;
  for (uint64_t i = 0; i < q; ++i) {
    Elem r = e.rhs(f.from_index(i));
    if (r.is_zero())
      n += 1;
    else if (is_sq[elem_index(r)])
      n += 2;
  }
  return n;
}

uint64_t count_points_bsgs(const Curve& e, uint64_t seed) {
  const Field& f = e.field();
  const uint64_t q = field_size(f);
  if (q > (1ULL << 32)) fail(Errc::SizeBound, "point counting limited to q <= 2^32");
  std::mt19937_64 rng(seed);
  const uint64_t s = isqrt_floor(4 * q);  // floor(2 sqrt q)
  const uint64_t lo = q + 1 - s, hi = q + 1 + s;

  // Quadratic twist y^2 = x^3 + a d^2 x + b d^3 for a non-square d.
  Elem d = f.random_nonzero(rng);
  while (ff::is_square(d)) d = f.random_nonzero(rng);
  Curve twist = Curve::short_form(e.a() * d * d, e.b() * d * d * d);

  uint64_t le = 1, lt = 1;
  for (int round = 0; round < 64; ++round) {
    uint64_t a = point_order_lcm(e, lo, hi, 1, rng);
    uint64_t b = point_order_lcm(twist, lo, hi, 1, rng);
    if (a == 0 || b == 0) fail(Errc::BoundExceeded, "no annihilator in the Hasse interval");
    le = std::lcm(le, a);
    lt = std::lcm(lt, b);
    std::vector<uint64_t> cands;
    for (uint64_t n = (lo + le - 1) / le * le; n <= hi; n += le) {
      if ((2 * q + 2 - n) % lt == 0) cands.push_back(n);
    }
    if (cands.size() == 1) {
      const uint64_t n = cands[0];
      for (int i = 0; i < 4; ++i) {
        if (!e.mul(e.random_point(rng), WideUint(n)).is_infinity())
          fail(Errc::BoundExceeded, "group order check failed");
      }
      return n;
    }
    if (cands.empty()) fail(Errc::BoundExceeded, "inconsistent point orders");
  }
  fail(Errc::BoundExceeded, "point count not determined");
}

uint64_t count_points(const Curve& e, uint64_t seed) {
  const uint64_t q = field_size(e.field());
  if (q <= (1ULL << 16)) return count_points_exhaustive(e);
  return count_points_bsgs(e, seed);
}

int64_t frobenius_trace(const Curve& e, uint64_t count) {
  const uint64_t q = field_size(e.field());
  return static_cast<int64_t>(q + 1) - static_cast<int64_t>(count);
}

uint64_t trace_mod_l(const Curve& e, uint64_t l, uint64_t seed) {
  if (l < 3 || !ff::is_prime(l)) fail(Errc::OddPrimeRequired, "l = " + std::to_string(l));
  int64_t t = frobenius_trace(e, count_points(e, seed)) % static_cast<int64_t>(l);
  return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(l) : t);
}

DivisionPolynomials::DivisionPolynomials(const Curve& e) : e_(e) {
  const Field& f = e.field();
  Poly r(f, {e.b(), e.a(), f.zero(), f.one()});
  rhs_sq_ = r * r;
  const Elem& a = e.a();
  const Elem& b = e.b();
  cache_.push_back(Poly(f));
  cache_.push_back(Poly::constant(f.one()));
  cache_.push_back(Poly::constant(f.from_int(2)));
  cache_.push_back(Poly(f, {-(a * a), b.scaled(12), a.scaled(6), f.zero(), f.from_int(3)}));
  Poly f4(f, {-(b * b).scaled(8) - a * a * a, -(a * b).scaled(4), -(a * a).scaled(5), b.scaled(20), a.scaled(5),
              f.zero(), f.one()});
  cache_.push_back(f4.scaled(f.from_int(4)));
  have_.assign(5, true);
}

const Poly& DivisionPolynomials::get(uint64_t n) {
  if (n < have_.size() && have_[n]) return cache_[n];
  if (n >= cache_.size()) {
    cache_.resize(n + 1);
    have_.resize(n + 1, false);
  }
  const uint64_t m = n / 2;
  Poly out;
  if (n % 2 == 1) {
    Poly fm2 = get(m + 2), fm = get(m), fm1 = get(m - 1), fp1 = get(m + 1);
    Poly t1 = fm2 * fm * fm * fm;
    Poly t2 = fm1 * fp1 * fp1 * fp1;
    if (m % 2 == 0)
      out = rhs_sq_ * t1 - t2;
    else
      out = t1 - rhs_sq_ * t2;
  } else {
    Poly fm = get(m), fm2 = get(m + 2), fm1 = get(m - 1), fmm2 = get(m - 2), fp1 = get(m + 1);
    out = (fm * (fm2 * fm1 * fm1 - fmm2 * fp1 * fp1)).scaled(e_.field().from_int(2).inv());
  }
  cache_[n] = std::move(out);
  have_[n] = true;
  return cache_[n];
}

Poly division_polynomial(const Curve& e, uint64_t n) {
  DivisionPolynomials d(e);
  return d.get(n);
}

}  // namespace frobclass::ec

#include "frobclass/torsion.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace frobclass::ec {

std::string to_string(RationalTorsion r) {
  switch (r) {
    case RationalTorsion::None: return "none";
    case RationalTorsion::Partial: return "partial";
    case RationalTorsion::Full: return "full";
  }
  return "?";
}

TorsionAnalysis analyze_torsion(const Curve& e, uint64_t l, uint64_t seed) {
  conj::require_odd_prime(l);
  const ff::Field& f = e.field();
  if (f.characteristic() == l) fail(Errc::InvalidInput, "l equals the characteristic");
  std::mt19937_64 rng(seed);
  Poly psi = division_polynomial(e, l).monic();
  Poly rhs(f, {e.b(), e.a(), f.zero(), f.one()});

  TorsionAnalysis out;
  out.l = l;
  out.field_degree = 1;
  for (Poly& g : ff::factor_squarefree(psi, rng)) {
    TorsionFactor tf;
    tf.degree = g.degree();
    WideUint ex = WideUint::power(f.characteristic(), static_cast<unsigned>(f.degree() * tf.degree));
    ex.sub_small(1).shr1();
    Poly r = (rhs % g).powmod(ex, g);
    tf.y_rational = r.degree() == 0 && r.coeff(0).is_one();
    const int need = tf.y_rational ? tf.degree : 2 * tf.degree;
    out.field_degree = std::lcm(out.field_degree, need);
    tf.g = std::move(g);
    out.factors.push_back(std::move(tf));
  }
  // An element of GL_2(F_l) has order at most l^2 - 1.
  if (static_cast<uint64_t>(out.field_degree) > l * (l * l - 1)) fail(Errc::BoundExceeded, "torsion degree out of range");
  return out;
}

int torsion_field_degree(const Curve& e, uint64_t l, uint64_t seed) { return analyze_torsion(e, l, seed).field_degree; }

RationalTorsion rational_torsion_check(const Curve& e, uint64_t l, uint64_t seed) {
  TorsionAnalysis a = analyze_torsion(e, l, seed);
  uint64_t n = 1;
  for (const auto& t : a.factors)
    if (t.degree == 1 && t.y_rational) n += 2;
  if (n == l * l) return RationalTorsion::Full;
  if (n == l) return RationalTorsion::Partial;
  if (n == 1) return RationalTorsion::None;
  fail(Errc::BoundExceeded, "rational l-torsion of impossible size " + std::to_string(n));
}

TorsionField make_torsion_field(const Curve& e, int k, std::optional<std::vector<uint64_t>> modulus, uint64_t seed) {
  const ff::Field& base = e.field();
  if (k < 1) fail(Errc::InvalidInput, "torsion field degree must be positive");
  ff::Field ext = ff::Field::extension(base.characteristic(), base.degree() * k, std::move(modulus), seed);
  TorsionField tf;
  tf.base_curve = e;
  tf.embed = ff::Embedding::find(base, ext, seed);
  tf.curve = e.base_change(tf.embed);
  tf.q = field_size(base);
  tf.k = k;
  return tf;
}

Point frobenius(const TorsionField& tf, const Point& p) {
  if (p.is_infinity()) return p;
  return Point(ff::frobenius_power(p.x(), tf.q), ff::frobenius_power(p.y(), tf.q));
}

std::vector<Point> torsion_points(const TorsionField& tf, uint64_t l, uint64_t seed) {
  TorsionAnalysis a = analyze_torsion(tf.base_curve, l, seed);
  if (tf.k % a.field_degree != 0)
    fail(Errc::NotTorsionField, "E[" + std::to_string(l) + "] needs degree " + std::to_string(a.field_degree) +
                                    ", field has degree " + std::to_string(tf.k));
  std::mt19937_64 rng(seed);
  const Curve& c = tf.curve;
  std::vector<Point> pts;
  for (const auto& fac : a.factors) {
    Poly g = fac.g.map_coeffs(tf.ext(), tf.embed);
    Elem r = ff::find_root_split(g, rng);
    for (int i = 0; i < fac.degree; ++i) {
      auto p = c.lift_x(r);
      if (!p) fail(Errc::NotTorsionField, "y-coordinate not in the torsion field");
      pts.push_back(*p);
      pts.push_back(c.neg(*p));
      r = ff::frobenius_power(r, tf.q);
    }
  }
  std::sort(pts.begin(), pts.end());
  if (pts.size() != l * l - 1) fail(Errc::BoundExceeded, "wrong number of torsion points");
  return pts;
}

namespace {

TorsionBasis finish_basis(const TorsionField& tf, uint64_t l, const Point& q1, const Point& q2, uint64_t seed,
                          const pairing::PairingFn& pair) {
  TorsionBasis b;
  b.l = l;
  b.tf = tf;
  b.q1 = q1;
  b.q2 = q2;
  b.zeta = pair(tf.curve, q1, q2, l, seed);
  if (b.zeta.is_one()) fail(Errc::DependentPoints, q1.to_string() + " and " + q2.to_string() + " are dependent");
  return b;
}

}  // namespace

TorsionBasis torsion_basis(const TorsionField& tf, uint64_t l, uint64_t seed, const pairing::PairingFn& pair) {
  std::vector<Point> pts = torsion_points(tf, l, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const Curve& c = tf.curve;
  for (int attempt = 0; attempt < 16; ++attempt) {
    const Point q1 = pts[rng() % pts.size()];
    std::set<Point> line;
    Point m;
    for (uint64_t i = 0; i < l; ++i) {
      line.insert(m);
      m = c.add(m, q1);
    }
    std::vector<Point> rest;
    for (const auto& p : pts)
      if (!line.count(p)) rest.push_back(p);
    const Point q2 = rest[rng() % rest.size()];
    try {
      return finish_basis(tf, l, q1, q2, seed, pair);
    } catch (const Error& err) {
      if (err.code() != Errc::DependentPoints) throw;
    }
  }
  fail(Errc::DependentPoints, "no basis with nondegenerate pairing found");
}

TorsionBasis make_basis(const TorsionField& tf, uint64_t l, const Point& q1, const Point& q2, uint64_t seed,
                        const pairing::PairingFn& pair) {
  const Curve& c = tf.curve;
  for (const Point* p : {&q1, &q2}) {
    if (!c.on_curve(*p)) fail(Errc::NotABasis, p->to_string() + " is not on the curve over the torsion field");
    if (p->is_infinity() || !c.mul(*p, static_cast<int64_t>(l)).is_infinity())
      fail(Errc::NotABasis, p->to_string() + " is not a nonzero l-torsion point");
  }
  return finish_basis(tf, l, q1, q2, seed, pair);
}

std::vector<Point> span_table(const TorsionBasis& b) {
  const Curve& c = b.tf.curve;
  std::vector<Point> t;
  t.reserve(b.l * b.l);
  Point a;
  for (uint64_t i = 0; i < b.l; ++i) {
    Point s = a;
    for (uint64_t j = 0; j < b.l; ++j) {
      t.push_back(s);
      s = c.add(s, b.q2);
    }
    a = c.add(a, b.q1);
  }
  return t;
}

std::pair<uint64_t, uint64_t> coordinates(const TorsionBasis& b, const std::vector<Point>& table, const Point& p) {
  for (size_t i = 0; i < table.size(); ++i)
    if (table[i] == p) return {i / b.l, i % b.l};
  fail(Errc::NotABasis, p.to_string() + " is not in the span of the basis");
}

conj::Matrix frobenius_matrix(const TorsionBasis& b) {
  const auto table = span_table(b);
  auto [a1, b1] = coordinates(b, table, frobenius(b.tf, b.q1));
  auto [a2, b2] = coordinates(b, table, frobenius(b.tf, b.q2));
  conj::Matrix m = conj::Matrix::of2(b.l, static_cast<int64_t>(a1), static_cast<int64_t>(a2),
                                     static_cast<int64_t>(b1), static_cast<int64_t>(b2));
  if (m.det() == 0) fail(Errc::NotABasis, "Frobenius matrix is singular");
  return m;
}

TorsionBasis transform_basis(const TorsionBasis& b, const conj::Matrix& c, uint64_t seed,
                             const pairing::PairingFn& pair) {
  const Curve& e = b.tf.curve;
  auto comb = [&](uint64_t x, uint64_t y) {
    return e.add(e.mul(b.q1, static_cast<int64_t>(x)), e.mul(b.q2, static_cast<int64_t>(y)));
  };
  Point n1 = comb(c.at(0, 0), c.at(1, 0));
  Point n2 = comb(c.at(0, 1), c.at(1, 1));
  return finish_basis(b.tf, b.l, n1, n2, seed, pair);
}

TorsionBasis basis_for_representative(const TorsionBasis& b, const conj::Matrix& m, const conj::Matrix& sigma,
                                      conj::Matrix* used, uint64_t seed, const pairing::PairingFn& pair) {
  auto c = conj::find_conjugator(m, sigma);
  if (!c) fail(Errc::NotConjugate, m.to_string() + " is not conjugate to " + sigma.to_string());
  TorsionBasis out = transform_basis(b, *c, seed, pair);
  if (!(frobenius_matrix(out) == sigma)) fail(Errc::AuditFailed, "adjusted basis does not realise " + sigma.to_string());
  if (used) *used = *c;
  return out;
}

}  // namespace frobclass::ec

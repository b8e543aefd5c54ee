#include "frobclass/conj.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace frobclass::conj {

using ff::addmod;
using ff::invmod;
using ff::mulmod;
using ff::submod;

namespace {

uint64_t red(int64_t v, uint64_t l) { return ff::reduce_signed(v, l); }

void check_compatible(const Matrix& a, const Matrix& b) {
  if (a.l() != b.l() || a.n() != b.n()) fail(Errc::DimensionMismatch, "matrices of different shape or modulus");
}

}  // namespace

void require_odd_prime(uint64_t l) {
  if (l < 3 || !ff::is_prime(l)) fail(Errc::OddPrimeRequired, "l = " + std::to_string(l));
}

Matrix::Matrix(uint64_t l, size_t n) : l_(l), n_(n), e_(n * n, 0) {}

Matrix::Matrix(uint64_t l, const std::vector<std::vector<int64_t>>& rows) : l_(l), n_(rows.size()) {
  for (const auto& r : rows) {
    if (r.size() != n_) fail(Errc::DimensionMismatch, "matrix rows must have length " + std::to_string(n_));
    for (int64_t v : r) e_.push_back(red(v, l));
  }
}

Matrix Matrix::identity(uint64_t l, size_t n) { return scalar(l, n, 1); }

Matrix Matrix::scalar(uint64_t l, size_t n, uint64_t lambda) {
  Matrix m(l, n);
  for (size_t i = 0; i < n; ++i) m.e_[i * n + i] = lambda % l;
  return m;
}

Matrix Matrix::of2(uint64_t l, int64_t a, int64_t b, int64_t c, int64_t d) { return Matrix(l, {{a, b}, {c, d}}); }

void Matrix::set(size_t i, size_t j, int64_t v) { e_[i * n_ + j] = red(v, l_); }

Matrix Matrix::operator*(const Matrix& o) const {
  check_compatible(*this, o);
  Matrix r(l_, n_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t k = 0; k < n_; ++k) {
      const uint64_t a = e_[i * n_ + k];
      if (!a) continue;
      for (size_t j = 0; j < n_; ++j)
        r.e_[i * n_ + j] = addmod(r.e_[i * n_ + j], mulmod(a, o.e_[k * n_ + j], l_), l_);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_compatible(*this, o);
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = addmod(e_[i], o.e_[i], l_);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_compatible(*this, o);
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = submod(e_[i], o.e_[i], l_);
  return r;
}

Matrix Matrix::scaled(uint64_t s) const {
  Matrix r = *this;
  for (auto& v : r.e_) v = mulmod(v, s % l_, l_);
  return r;
}

uint64_t Matrix::det() const {
  // Gaussian elimination; n is tiny.
  std::vector<uint64_t> a = e_;
  uint64_t d = 1;
  for (size_t c = 0; c < n_; ++c) {
    size_t piv = c;
    while (piv < n_ && a[piv * n_ + c] == 0) ++piv;
    if (piv == n_) return 0;
    if (piv != c) {
      for (size_t j = 0; j < n_; ++j) std::swap(a[c * n_ + j], a[piv * n_ + j]);
      d = submod(0, d, l_);
    }
    const uint64_t pv = a[c * n_ + c];
    d = mulmod(d, pv, l_);
    const uint64_t inv = invmod(pv, l_);
    for (size_t r = c + 1; r < n_; ++r) {
      const uint64_t f = mulmod(a[r * n_ + c], inv, l_);
      if (!f) continue;
      for (size_t j = c; j < n_; ++j) a[r * n_ + j] = submod(a[r * n_ + j], mulmod(f, a[c * n_ + j], l_), l_);
    }
  }
  return d;
}

uint64_t Matrix::trace() const {
  uint64_t t = 0;
  for (size_t i = 0; i < n_; ++i) t = addmod(t, e_[i * n_ + i], l_);
  return t;
}

Matrix Matrix::inverse() const {
  std::vector<uint64_t> a = e_;
  Matrix inv = identity(l_, n_);
  for (size_t c = 0; c < n_; ++c) {
    size_t piv = c;
    while (piv < n_ && a[piv * n_ + c] == 0) ++piv;
    if (piv == n_) fail(Errc::Singular, to_string() + " is not invertible mod " + std::to_string(l_));
    for (size_t j = 0; j < n_; ++j) {
      std::swap(a[c * n_ + j], a[piv * n_ + j]);
      std::swap(inv.e_[c * n_ + j], inv.e_[piv * n_ + j]);
    }
    const uint64_t pinv = invmod(a[c * n_ + c], l_);
    for (size_t j = 0; j < n_; ++j) {
      a[c * n_ + j] = mulmod(a[c * n_ + j], pinv, l_);
      inv.e_[c * n_ + j] = mulmod(inv.e_[c * n_ + j], pinv, l_);
    }
    for (size_t r = 0; r < n_; ++r) {
      if (r == c) continue;
      const uint64_t f = a[r * n_ + c];
      if (!f) continue;
      for (size_t j = 0; j < n_; ++j) {
        a[r * n_ + j] = submod(a[r * n_ + j], mulmod(f, a[c * n_ + j], l_), l_);
        inv.e_[r * n_ + j] = submod(inv.e_[r * n_ + j], mulmod(f, inv.e_[c * n_ + j], l_), l_);
      }
    }
  }
  return inv;
}

bool Matrix::is_scalar() const {
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j)
      if (e_[i * n_ + j] != (i == j ? e_[0] : 0)) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (size_t j = 0; j < n_; ++j) os << (j ? "," : "") << e_[i * n_ + j];
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Scalar: return "scalar";
    case Kind::SplitSemisimple: return "split-semisimple";
    case Kind::NonsplitSemisimple: return "nonsplit-semisimple";
    case Kind::Nonsemisimple: return "nonsemisimple";
  }
  return "?";
}

std::string ClassDescriptor::name() const {
  switch (kind) {
    case Kind::Scalar: return "Z(" + std::to_string(*eigenvalue) + ")";
    case Kind::SplitSemisimple:
    case Kind::NonsplitSemisimple: return "S(" + std::to_string(trace) + "," + std::to_string(det) + ")";
    case Kind::Nonsemisimple:
      if (square_label) {
        const std::string sign = *eigenvalue == 1 ? "+1" : "-1";
        return "U(" + sign + "," + (*square_label ? "qr" : "nqr") + ")";
      }
      return "U(" + std::to_string(*eigenvalue) + ")";
  }
  return "?";
}

ClassDescriptor gl_class_from_charpoly(uint64_t l, uint64_t trace, uint64_t det, bool scalar_if_repeated) {
  require_odd_prime(l);
  ClassDescriptor d;
  d.l = l;
  d.trace = trace % l;
  d.det = det % l;
  if (d.det == 0) fail(Errc::Singular, "determinant 0");
  const uint64_t disc = submod(mulmod(d.trace, d.trace, l), mulmod(4, d.det, l), l);
  if (disc == 0) {
    d.eigenvalue = mulmod(d.trace, invmod(2, l), l);
    d.kind = scalar_if_repeated ? Kind::Scalar : Kind::Nonsemisimple;
  } else {
    d.kind = ff::is_square_mod_l(disc, l) ? Kind::SplitSemisimple : Kind::NonsplitSemisimple;
  }
  return d;
}

std::optional<bool> sl_label(const Matrix& m) {
  if (m.n() != 2 || m.det() != 1 || m.is_scalar()) return std::nullopt;
  const uint64_t l = m.l();
  const uint64_t t = m.trace();
  uint64_t eps;
  if (t == 2 % l)
    eps = 1;
  else if (t == l - 2)
    eps = l - 1;
  else
    return std::nullopt;
  Matrix n = m.scaled(eps) - Matrix::identity(l, 2);
  // v = e2 unless N e2 = 0, in which case e1 works.
  uint64_t v0 = 0, v1 = 1;
  if (n.at(0, 1) == 0 && n.at(1, 1) == 0) v0 = 1, v1 = 0;
  const uint64_t nv0 = addmod(mulmod(n.at(0, 0), v0, l), mulmod(n.at(0, 1), v1, l), l);
  const uint64_t nv1 = addmod(mulmod(n.at(1, 0), v0, l), mulmod(n.at(1, 1), v1, l), l);
  const uint64_t d = submod(mulmod(nv0, v1, l), mulmod(v0, nv1, l), l);
  return ff::is_square_mod_l(d, l);
}

ClassDescriptor gl_class_of(const Matrix& m) {
  if (m.n() != 2) fail(Errc::DimensionMismatch, "class descriptors are for 2x2 matrices");
  require_odd_prime(m.l());
  if (m.det() == 0) fail(Errc::Singular, m.to_string() + " is singular");
  ClassDescriptor d = gl_class_from_charpoly(m.l(), m.trace(), m.det(), m.is_scalar());
  d.square_label = sl_label(m);
  return d;
}

bool class_splits(const Matrix& sigma) {
  if (sigma.n() != 2 || sigma.det() != 1) fail(Errc::NotSL2, sigma.to_string() + " is not in SL_2");
  return sl_label(sigma).has_value();
}

std::vector<Matrix> enumerate_gl2(uint64_t l) {
  std::vector<Matrix> out;
  for (uint64_t a = 0; a < l; ++a)
    for (uint64_t b = 0; b < l; ++b)
      for (uint64_t c = 0; c < l; ++c)
        for (uint64_t d = 0; d < l; ++d) {
          Matrix m = Matrix::of2(l, a, b, c, d);
          if (m.det() != 0) out.push_back(std::move(m));
        }
  return out;
}

std::vector<Matrix> enumerate_sl2(uint64_t l) {
  std::vector<Matrix> out;
  for (auto& m : enumerate_gl2(l))
    if (m.det() == 1) out.push_back(std::move(m));
  return out;
}

// Calls fn(det X) for every X in GL_2(F_l) commuting with sigma, by plain
// enumeration of all l^4 matrices.
template <typename Fn>
void for_each_centralizer_det(const Matrix& sigma, Fn&& fn) {
  const uint64_t l = sigma.l();
  const uint64_t s00 = sigma.at(0, 0), s01 = sigma.at(0, 1), s10 = sigma.at(1, 0), s11 = sigma.at(1, 1);
  for (uint64_t a = 0; a < l; ++a)
    for (uint64_t b = 0; b < l; ++b)
      for (uint64_t c = 0; c < l; ++c)
        for (uint64_t d = 0; d < l; ++d) {
          // X sigma == sigma X entrywise
          if ((a * s00 + b * s10) % l != (s00 * a + s01 * c) % l) continue;
          if ((a * s01 + b * s11) % l != (s00 * b + s01 * d) % l) continue;
          if ((c * s00 + d * s10) % l != (s10 * a + s11 * c) % l) continue;
          if ((c * s01 + d * s11) % l != (s10 * b + s11 * d) % l) continue;
          const uint64_t det = (a * d + l * l - b * c % l) % l;
          if (det) fn(det);
        }
}

bool class_splits_brute(const Matrix& sigma) {
  if (sigma.n() != 2 || sigma.det() != 1) fail(Errc::NotSL2, sigma.to_string() + " is not in SL_2");
  const uint64_t l = sigma.l();
  bool nonsquare_det = false;
  for_each_centralizer_det(sigma, [&](uint64_t d) {
    if (!ff::is_square_mod_l(d, l)) nonsquare_det = true;
  });
  if (nonsquare_det) return false;
  // Every centralizer determinant is a square, so the GL_2 class is the union
  // of two SL_2 classes.
  return true;
}

std::optional<Matrix> find_conjugator(const Matrix& m, const Matrix& sigma, bool special) {
  check_compatible(m, sigma);
  if (m.n() != 2) fail(Errc::DimensionMismatch, "conjugator search is for 2x2 matrices");
  const uint64_t l = m.l();
  for (uint64_t a = 0; a < l; ++a)
    for (uint64_t b = 0; b < l; ++b)
      for (uint64_t c = 0; c < l; ++c)
        for (uint64_t d = 0; d < l; ++d) {
          Matrix x = Matrix::of2(l, a, b, c, d);
          const uint64_t dt = x.det();
          if (dt == 0 || (special && dt != 1)) continue;
          if (m * x == x * sigma) return x;
        }
  return std::nullopt;
}

bool sl_conjugate(const Matrix& a, const Matrix& b) {
  if (a.n() != 2 || a.det() != 1) fail(Errc::NotSL2, a.to_string() + " is not in SL_2");
  if (b.n() != 2 || b.det() != 1) fail(Errc::NotSL2, b.to_string() + " is not in SL_2");
  check_compatible(a, b);
  return find_conjugator(a, b, true).has_value();
}

bool gl_conjugate(const Matrix& a, const Matrix& b) { return find_conjugator(a, b, false).has_value(); }

bool sl_conjugate_fast(const Matrix& a, const Matrix& b) {
  if (a.n() != 2 || a.det() != 1) fail(Errc::NotSL2, a.to_string() + " is not in SL_2");
  if (b.n() != 2 || b.det() != 1) fail(Errc::NotSL2, b.to_string() + " is not in SL_2");
  check_compatible(a, b);
  ClassDescriptor da = gl_class_of(a), db = gl_class_of(b);
  return da.trace == db.trace && da.kind == db.kind && da.square_label == db.square_label;
}

namespace {

// Basis of the null space of an r x c system over F_l.
std::vector<std::vector<uint64_t>> null_space(std::vector<std::vector<uint64_t>> a, size_t cols, uint64_t l) {
  std::vector<int> pivot_col;
  size_t row = 0;
  for (size_t c = 0; c < cols && row < a.size(); ++c) {
    size_t piv = row;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[row], a[piv]);
    const uint64_t inv = invmod(a[row][c], l);
    for (auto& v : a[row]) v = mulmod(v, inv, l);
    for (size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const uint64_t f = a[r][c];
      for (size_t j = 0; j < cols; ++j) a[r][j] = submod(a[r][j], mulmod(f, a[row][j], l), l);
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<uint64_t>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<uint64_t> v(cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) v[static_cast<size_t>(pivot_col[r])] = submod(0, a[r][free], l);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

SplittingData splitting_data_general(const Matrix& sigma) {
  const uint64_t l = sigma.l();
  const size_t n = sigma.n();
  require_odd_prime(l);
  if (n < 2 || n > 3) fail(Errc::ScaleBound, "n = " + std::to_string(n) + " outside 2..3");
  if ((n == 2 && l > 11) || (n == 3 && l > 7)) fail(Errc::ScaleBound, "l = " + std::to_string(l) + " too large");
  if (sigma.det() != 1) fail(Errc::NotSLn, sigma.to_string() + " does not have determinant 1");

  std::set<uint64_t> dets;
  if (n == 2) {
    for_each_centralizer_det(sigma, [&](uint64_t d) { dets.insert(d); });
  } else {
    // Unknowns X_ij; equation (sigma X - X sigma)_ij = 0 for each (i, j).
    const size_t vars = n * n;
    std::vector<std::vector<uint64_t>> rows;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        std::vector<uint64_t> eq(vars, 0);
        for (size_t k = 0; k < n; ++k) {
          eq[k * n + j] = addmod(eq[k * n + j], sigma.at(i, k), l);
          eq[i * n + k] = submod(eq[i * n + k], sigma.at(k, j), l);
        }
        rows.push_back(std::move(eq));
      }
    const auto basis = null_space(rows, vars, l);
    const size_t dim = basis.size();
    std::vector<uint64_t> coef(dim, 0);
    for (;;) {
      Matrix x(l, n);
      for (size_t b = 0; b < dim; ++b) {
        if (!coef[b]) continue;
        for (size_t v = 0; v < vars; ++v)
          x.set(v / n, v % n, static_cast<int64_t>(addmod(x.at(v / n, v % n), mulmod(coef[b], basis[b][v], l), l)));
      }
      const uint64_t d = x.det();
      if (d) dets.insert(d);
      if (dets.size() == l - 1) break;
      size_t pos = 0;
      while (pos < dim && ++coef[pos] == l) coef[pos++] = 0;
      if (pos == dim) break;
    }
  }
  std::vector<uint64_t> gens(dets.begin(), dets.end());
  ff::ResidueSubgroup d = ff::ResidueSubgroup::generated_by(l, gens);
  const uint64_t m = d.index();
  if (!(d == ff::ResidueSubgroup::of_index(l, m))) fail(Errc::AuditFailed, "determinant image is not the index-m subgroup");
  return SplittingData{m, d};
}

uint64_t exterior_form_eval(const std::vector<std::vector<uint64_t>>& vectors, uint64_t l) {
  const size_t n = vectors.size();
  if (n == 0) fail(Errc::DimensionMismatch, "no vectors");
  Matrix m(l, n);
  for (size_t j = 0; j < n; ++j) {
    if (vectors[j].size() != n)
      fail(Errc::DimensionMismatch, "expected " + std::to_string(n) + " vectors of length " + std::to_string(n));
    for (size_t i = 0; i < n; ++i) m.set(i, j, static_cast<int64_t>(vectors[j][i] % l));
  }
  return m.det();
}

std::vector<ClassRow> sl2_class_representatives(uint64_t l) {
  require_odd_prime(l);
  if (l > 11) fail(Errc::ScaleBound, "class tables limited to l <= 11");
  const std::vector<Matrix> group = enumerate_sl2(l);
  std::set<Matrix> seen;
  std::vector<ClassRow> rows;
  for (const auto& a : group) {
    if (seen.count(a)) continue;
    std::set<Matrix> orbit;
    for (const auto& g : group) {
      // g^{-1} for det 1 is [[d,-b],[-c,a]].
      Matrix gi = Matrix::of2(l, static_cast<int64_t>(g.at(1, 1)), -static_cast<int64_t>(g.at(0, 1)),
                              -static_cast<int64_t>(g.at(1, 0)), static_cast<int64_t>(g.at(0, 0)));
      orbit.insert(g * a * gi);
    }
    seen.insert(orbit.begin(), orbit.end());
    rows.push_back(ClassRow{*orbit.begin(), gl_class_of(*orbit.begin()), orbit.size()});
  }
  return rows;
}

uint64_t smallest_nonsquare(uint64_t l) {
  require_odd_prime(l);
  for (uint64_t u = 2; u < l; ++u)
    if (!ff::is_square_mod_l(u, l)) return u;
  fail(Errc::InvalidInput, "no non-square");
}

Matrix unipotent_candidate(uint64_t l, uint64_t eps, uint64_t c) {
  return Matrix::of2(l, 1, static_cast<int64_t>(c % l), 0, 1).scaled(eps);
}

}  // namespace frobclass::conj

#include "frobclass/poly.hpp"

#include <algorithm>
#include <sstream>

namespace frobclass::ff {

Poly::Poly(Field f, const std::vector<Elem>& coeffs) : f_(std::move(f)) {
  const size_t k = static_cast<size_t>(f_.degree());
  c_.reserve(coeffs.size() * k);
  for (const Elem& e : coeffs) {
    if (!(e.field() == f_)) fail(Errc::InvalidInput, "polynomial coefficient from a different field");
    c_.insert(c_.end(), e.coeffs().begin(), e.coeffs().end());
  }
  trim();
}

Poly Poly::from_residues(const Field& f, std::span<const uint64_t> coeffs) {
  std::vector<Elem> v;
  v.reserve(coeffs.size());
  for (uint64_t c : coeffs) v.push_back(f.from_coeffs(std::span<const uint64_t>(&c, 1)));
  return Poly(f, v);
}

Poly Poly::from_signed(const Field& f, std::span<const int64_t> coeffs) {
  std::vector<Elem> v;
  v.reserve(coeffs.size());
  for (int64_t c : coeffs) v.push_back(f.from_int(c));
  return Poly(f, v);
}

Poly Poly::constant(const Elem& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Elem& c, size_t degree) {
  std::vector<Elem> v(degree + 1, c.field().zero());
  v[degree] = c;
  return Poly(c.field(), v);
}

void Poly::trim() {
  if (!f_.valid()) return;
  const size_t k = static_cast<size_t>(f_.degree());
  while (!c_.empty() && std::all_of(c_.end() - static_cast<long>(k), c_.end(), [](uint64_t v) { return v == 0; })) {
    c_.resize(c_.size() - k);
  }
}

Elem Poly::coeff(size_t i) const {
  if (i >= size()) return f_.zero();
  const size_t k = static_cast<size_t>(f_.degree());
  return Elem(f_, std::vector<uint64_t>(c_.begin() + static_cast<long>(i * k), c_.begin() + static_cast<long>((i + 1) * k)));
}

std::vector<Elem> Poly::coeffs() const {
  std::vector<Elem> out;
  out.reserve(size());
  for (size_t i = 0; i < size(); ++i) out.push_back(coeff(i));
  return out;
}

std::vector<uint64_t> Poly::residues() const {
  std::vector<uint64_t> out;
  out.reserve(size());
  for (size_t i = 0; i < size(); ++i) out.push_back(raw(i)[0]);
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Poly r(f_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  const uint64_t p = f_.characteristic();
  for (size_t i = 0; i < r.c_.size(); ++i) {
    uint64_t a = i < c_.size() ? c_[i] : 0, b = i < o.c_.size() ? o.c_[i] : 0;
    r.c_[i] = addmod(a, b, p);
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  const uint64_t p = f_.characteristic();
  for (auto& v : r.c_) v = v ? p - v : 0;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return -o;
  Poly r(f_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  const uint64_t p = f_.characteristic();
  for (size_t i = 0; i < r.c_.size(); ++i) {
    uint64_t a = i < c_.size() ? c_[i] : 0, b = i < o.c_.size() ? o.c_[i] : 0;
    r.c_[i] = submod(a, b, p);
  }
  r.trim();
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(f_.valid() ? f_ : o.f_);
  const size_t k = static_cast<size_t>(f_.degree());
  const size_t na = size(), nb = o.size();
  const uint64_t p = f_.characteristic();
  Poly r(f_);
  r.c_.assign((na + nb - 1) * k, 0);
  if (k == 1 && p < (1ULL << 60)) {
    // Prime field: accumulate unreduced, folding every 128 terms.
    std::vector<unsigned __int128> acc(na + nb - 1, 0);
    std::vector<uint32_t> count(na + nb - 1, 0);
    for (size_t i = 0; i < na; ++i) {
      const uint64_t a = c_[i];
      if (a == 0) continue;
      for (size_t j = 0; j < nb; ++j) {
        acc[i + j] += static_cast<unsigned __int128>(a) * o.c_[j];
        if (++count[i + j] == 128) {
          acc[i + j] %= p;
          count[i + j] = 0;
        }
      }
    }
    for (size_t i = 0; i < acc.size(); ++i) r.c_[i] = static_cast<uint64_t>(acc[i] % p);
  } else {
    std::vector<uint64_t> t(k);
    for (size_t i = 0; i < na; ++i) {
      for (size_t j = 0; j < nb; ++j) {
        f_.mul_raw(raw(i), o.raw(j), t.data());
        f_.add_raw(r.raw(i + j), t.data(), r.raw(i + j));
      }
    }
  }
  r.trim();
  return r;
}

Poly Poly::scaled(const Elem& s) const {
  Poly r = *this;
  const size_t k = static_cast<size_t>(f_.degree());
  std::vector<uint64_t> t(k);
  for (size_t i = 0; i < size(); ++i) {
    f_.mul_raw(raw(i), s.coeffs().data(), t.data());
    std::copy(t.begin(), t.end(), r.raw(i));
  }
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& m) const {
  if (m.is_zero()) fail(Errc::ZeroPolynomial, "division by the zero polynomial");
  if (size() < m.size()) return {Poly(m.f_), *this};
  const size_t k = static_cast<size_t>(f_.degree());
  const size_t dm = m.size() - 1;
  const uint64_t p = f_.characteristic();
  Poly rem = *this;
  Poly quo(f_);
  quo.c_.assign((size() - dm) * k, 0);
  std::vector<uint64_t> lead_inv(k), c(k), t(k);
  f_.inv_raw(m.raw(dm), lead_inv.data());
  const bool monic_prime = k == 1;
  for (size_t top = rem.size(); top-- > dm;) {
    const uint64_t* rt = rem.c_.data() + top * k;
    if (std::all_of(rt, rt + k, [](uint64_t v) { return v == 0; })) continue;
    f_.mul_raw(rt, lead_inv.data(), c.data());
    const size_t shift = top - dm;
    std::copy(c.begin(), c.end(), quo.raw(shift));
    if (monic_prime) {
      const uint64_t cc = c[0];
      for (size_t j = 0; j <= dm; ++j) {
        uint64_t& slot = rem.c_[shift + j];
        slot = submod(slot, ff::mulmod(cc, m.c_[j], p), p);
      }
    } else {
      for (size_t j = 0; j <= dm; ++j) {
        f_.mul_raw(c.data(), m.raw(j), t.data());
        f_.sub_raw(rem.raw(shift + j), t.data(), rem.raw(shift + j));
      }
    }
  }
  rem.trim();
  quo.trim();
  return {quo, rem};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inv());
}

Poly Poly::derivative() const {
  if (size() <= 1) return Poly(f_);
  std::vector<Elem> v;
  for (size_t i = 1; i < size(); ++i) v.push_back(coeff(i).scaled(i % f_.characteristic()));
  return Poly(f_, v);
}

Elem Poly::eval(const Elem& x) const {
  Elem acc = x.field().zero();
  for (size_t i = size(); i-- > 0;) acc = acc * x + coeff(i);
  return acc;
}

Poly Poly::powmod(const WideUint& e, const Poly& m) const {
  Poly base = *this % m;
  Poly r = Poly::constant(f_.one()) % m;
  for (size_t i = e.bit_length(); i-- > 0;) {
    r = (r * r) % m;
    if (e.bit(i)) r = (r * base) % m;
  }
  return r;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = size(); i-- > 0;) {
    Elem c = coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << "+";
    first = false;
    std::string cs = c.to_string();
    bool bare = c.is_constant();
    if (i == 0) {
      os << (bare ? cs : "(" + cs + ")");
    } else {
      if (!c.is_one()) os << (bare ? cs : "(" + cs + ")");
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const Field& F = f.field();
  const Poly x = Poly::x(F);
  const Poly fm = f.monic();
  Poly h = x % fm;
  for (int i = 1; i <= n; ++i) {
    h = h.powmod(F.order(), fm);
    if (i <= n / 2 && gcd(h - x, fm).degree() != 0) return false;
  }
  return h == x % fm;
}

namespace {

Poly random_poly_below(const Field& F, int deg, std::mt19937_64& rng) {
  std::vector<Elem> v;
  for (int i = 0; i < deg; ++i) v.push_back(F.random(rng));
  return Poly(F, v);
}

// A polynomial whose gcd with f splits off a random subset of the
// degree-d factors of f (probability about 1/2 each).
Poly splitting_probe(const Poly& f, int d, std::mt19937_64& rng) {
  const Field& F = f.field();
  const Poly a = random_poly_below(F, f.degree(), rng);
  if (F.characteristic() == 2) {
    // Trace to F_2 of a, computed in F[x]/(f).
    const int bits = F.degree() * d;
    Poly t = a % f, s = t;
    for (int i = 1; i < bits; ++i) {
      s = (s * s) % f;
      t = t + s;
    }
    return t;
  }
  WideUint qd = WideUint::power(F.characteristic(), static_cast<unsigned>(F.degree() * d));
  qd.sub_small(1).shr1();
  return a.powmod(qd, f) - Poly::constant(F.one());
}

}  // namespace

std::vector<Poly> equal_degree_factor(const Poly& f, int d, std::mt19937_64& rng) {
  if (f.degree() <= d) return {f.monic()};
  for (int attempt = 0; attempt < 512; ++attempt) {
    Poly g = gcd(splitting_probe(f, d, rng), f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto left = equal_degree_factor(g, d, rng);
      auto right = equal_degree_factor(f / g, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
  fail(Errc::BoundExceeded, "equal-degree splitting did not converge");
}

std::vector<Poly> factor_squarefree(const Poly& f, std::mt19937_64& rng) {
  std::vector<Poly> out;
  Poly rest = f.monic();
  if (rest.degree() <= 0) return out;
  const Field& F = f.field();
  const Poly x = Poly::x(F);
  Poly h = x % rest;
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    h = h.powmod(F.order(), rest);
    Poly g = gcd(h - x, rest);
    if (g.degree() > 0) {
      auto parts = equal_degree_factor(g, d, rng);
      out.insert(out.end(), parts.begin(), parts.end());
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back(rest.monic());
  std::sort(out.begin(), out.end());
  return out;
}

Elem find_root_split(const Poly& f, std::mt19937_64& rng) {
  Poly cur = f.monic();
  int stalls = 0;
  while (cur.degree() > 1) {
    Poly g = gcd(splitting_probe(cur, 1, rng), cur);
    if (g.degree() > 0 && g.degree() < cur.degree()) {
      Poly other = cur / g;
      cur = g.degree() <= other.degree() ? g : other.monic();
      stalls = 0;
    } else if (++stalls > 512) {
      fail(Errc::BoundExceeded, "root splitting did not converge");
    }
  }
  if (cur.degree() != 1) fail(Errc::InvalidInput, "polynomial has no root to extract");
  return -cur.coeff(0);
}

std::vector<Elem> poly_roots(const Poly& f, uint64_t seed) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Elem> roots;
  if (f.degree() <= 0) return roots;
  const Field& F = f.field();
  if (F.order() < WideUint((1ULL << 16) + 1)) {
    const uint64_t n = F.order().to_u64();
    for (uint64_t i = 0; i < n; ++i) {
      Elem e = F.from_index(i);
      if (f.eval(e).is_zero()) roots.push_back(e);
    }
  } else {
    const Poly fm = f.monic();
    const Poly x = Poly::x(F);
    Poly split = gcd(x.powmod(F.order(), fm) - x, fm);
    if (split.degree() > 0) {
      std::mt19937_64 rng(seed);
      for (const Poly& lin : equal_degree_factor(split, 1, rng)) roots.push_back(-lin.coeff(0));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<uint64_t> random_irreducible(uint64_t p, int k, std::mt19937_64& rng) {
  const Field F = Field::prime(p);
  std::uniform_int_distribution<uint64_t> dist(0, p - 1);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<uint64_t> m(static_cast<size_t>(k) + 1);
    for (int i = 0; i < k; ++i) m[i] = dist(rng);
    m[k] = 1;
    if (m[0] == 0) continue;
    if (is_irreducible(Poly::from_residues(F, m))) return m;
  }
  fail(Errc::BoundExceeded, "no irreducible polynomial found");
}

Embedding::Embedding(Field src, Field dst, Elem gen_image)
    : src_(std::move(src)), dst_(std::move(dst)), img_(std::move(gen_image)) {
  if (src_.characteristic() != dst_.characteristic() || dst_.degree() % src_.degree() != 0)
    fail(Errc::InvalidInput, "no embedding " + src_.describe() + " -> " + dst_.describe());
  powers_.push_back(dst_.one());
  for (int i = 1; i < src_.degree(); ++i) powers_.push_back(powers_.back() * img_);
  if (src_.degree() > 1) {
    Poly m = Poly::from_residues(dst_, src_.modulus());
    if (!m.eval(img_).is_zero()) fail(Errc::InvalidInput, "generator image is not a root of the modulus");
  }
}

Embedding Embedding::from_prime(const Field& src, const Field& dst) {
  if (src.degree() != 1) fail(Errc::InvalidInput, "source is not a prime field");
  return Embedding(src, dst, dst.zero());
}

Embedding Embedding::find(const Field& src, const Field& dst, uint64_t seed) {
  if (src.degree() == 1) return from_prime(src, dst);
  std::mt19937_64 rng(seed);
  Poly m = Poly::from_residues(dst, src.modulus());
  return Embedding(src, dst, find_root_split(m, rng));
}

Elem Embedding::operator()(const Elem& x) const {
  if (!(x.field() == src_)) fail(Errc::InvalidInput, "element is not in the embedding source");
  const uint64_t p = dst_.characteristic();
  std::vector<uint64_t> out(static_cast<size_t>(dst_.degree()), 0);
  for (size_t i = 0; i < powers_.size(); ++i) {
    const uint64_t c = x.coeffs()[i];
    if (!c) continue;
    const auto& pw = powers_[i].coeffs();
    for (size_t j = 0; j < out.size(); ++j) out[j] = addmod(out[j], mulmod(c, pw[j], p), p);
  }
  return Elem(dst_, std::move(out));
}

}  // namespace frobclass::ff

#include "frobclass/ff.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "frobclass/poly.hpp"

namespace frobclass::ff {

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t p) {
  if (a % p == 0) fail(Errc::InvalidInput, "inverse of zero mod " + std::to_string(p));
  return powmod(a, p - 2, p);
}

uint64_t reduce_signed(int64_t v, uint64_t p) {
  if (v >= 0) return static_cast<uint64_t>(v) % p;
  // -(v+1) avoids overflow at INT64_MIN.
  uint64_t m = (static_cast<uint64_t>(-(v + 1)) % p + 1) % p;
  return m == 0 ? 0 : p - m;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_square_mod_l(uint64_t u, uint64_t l) {
  if (l == 2 || !is_prime(l)) fail(Errc::OddPrimeRequired, "modulus " + std::to_string(l));
  if (u % l == 0) fail(Errc::ZeroResidue, "residue is zero mod " + std::to_string(l));
  return powmod(u, (l - 1) / 2, l) == 1;
}

// ---------------------------------------------------------------------------
// ResidueSubgroup

namespace {

void check_unit_modulus(uint64_t l) {
  if (!is_prime(l)) fail(Errc::NonPrime, std::to_string(l));
}

}  // namespace

ResidueSubgroup ResidueSubgroup::trivial(uint64_t l) {
  check_unit_modulus(l);
  return ResidueSubgroup(l, {1});
}

ResidueSubgroup ResidueSubgroup::all(uint64_t l) { return of_index(l, 1); }

ResidueSubgroup ResidueSubgroup::squares(uint64_t l) { return of_index(l, l == 2 ? 1 : 2); }

ResidueSubgroup ResidueSubgroup::of_index(uint64_t l, uint64_t m) {
  check_unit_modulus(l);
  if (m == 0 || (l - 1) % m != 0) {
    fail(Errc::InvalidInput, "index " + std::to_string(m) + " does not divide " + std::to_string(l - 1));
  }
  std::set<uint64_t> s;
  for (uint64_t u = 1; u < l; ++u) s.insert(powmod(u, m, l));
  return ResidueSubgroup(l, {s.begin(), s.end()});
}

ResidueSubgroup ResidueSubgroup::generated_by(uint64_t l, std::span<const uint64_t> gens) {
  check_unit_modulus(l);
  std::set<uint64_t> s{1};
  std::vector<uint64_t> frontier{1};
  while (!frontier.empty()) {
    uint64_t x = frontier.back();
    frontier.pop_back();
    for (uint64_t g : gens) {
      uint64_t gm = g % l;
      if (gm == 0) fail(Errc::ZeroResidue, "generator is zero mod l");
      uint64_t y = mulmod(x, gm, l);
      if (s.insert(y).second) frontier.push_back(y);
    }
  }
  return ResidueSubgroup(l, {s.begin(), s.end()});
}

bool ResidueSubgroup::contains(uint64_t u) const {
  return std::binary_search(elems_.begin(), elems_.end(), u % l_);
}

// ---------------------------------------------------------------------------
// Field

namespace {

using RawPoly = std::vector<uint64_t>;

void raw_trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo m over F_p; m must be nonzero with trimmed leading term.
void raw_rem(RawPoly& a, const RawPoly& m, uint64_t p) {
  raw_trim(a);
  const size_t dm = m.size() - 1;
  const uint64_t lead_inv = invmod(m.back(), p);
  while (a.size() > dm && !a.empty()) {
    uint64_t c = mulmod(a.back(), lead_inv, p);
    size_t shift = a.size() - 1 - dm;
    for (size_t j = 0; j <= dm; ++j) a[shift + j] = submod(a[shift + j], mulmod(c, m[j], p), p);
    raw_trim(a);
  }
}

}  // namespace

Field Field::make(uint64_t p, std::vector<uint64_t> modulus) {
  auto d = std::make_shared<Data>();
  d->p = p;
  d->k = static_cast<int>(modulus.size()) - 1;
  d->modulus = std::move(modulus);
  d->order = WideUint::power(p, static_cast<unsigned>(d->k));
  d->lazy = p < (1ULL << 60) && d->k <= 64;
  return Field(std::move(d));
}

Field Field::prime(uint64_t p) {
  if (!is_prime(p)) fail(Errc::NonPrime, std::to_string(p) + " is not prime");
  if (p >= (1ULL << 63)) fail(Errc::SizeBound, "characteristic must be below 2^63");
  return make(p, {0, 1});
}

Field Field::extension(uint64_t p, int k, std::optional<std::vector<uint64_t>> modulus, uint64_t seed) {
  Field base = prime(p);
  if (k < 1) fail(Errc::DegreeMismatch, "extension degree must be >= 1");
  if (modulus) {
    std::vector<uint64_t> m = *modulus;
    for (auto& c : m) c %= p;
    raw_trim(m);
    if (static_cast<int>(m.size()) - 1 != k) {
      fail(Errc::DegreeMismatch, "modulus degree differs from " + std::to_string(k));
    }
    if (m.back() != 1) fail(Errc::DegreeMismatch, "modulus must be monic");
    if (k == 1) return base;
    if (!is_irreducible(Poly::from_residues(base, m))) {
      fail(Errc::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    }
    return make(p, std::move(m));
  }
  if (k == 1) return base;
  std::mt19937_64 rng(seed);
  return make(p, random_irreducible(p, k, rng));
}

Field Field::extension_signed(uint64_t p, const std::vector<int64_t>& modulus) {
  std::vector<uint64_t> m;
  m.reserve(modulus.size());
  for (int64_t c : modulus) m.push_back(reduce_signed(c, p));
  return extension(p, static_cast<int>(modulus.size()) - 1, m);
}

Elem Field::zero() const { return Elem(*this, std::vector<uint64_t>(static_cast<size_t>(d_->k), 0)); }

Elem Field::one() const {
  std::vector<uint64_t> c(static_cast<size_t>(d_->k), 0);
  c[0] = 1 % d_->p;
  return Elem(*this, std::move(c));
}

Elem Field::from_int(int64_t v) const {
  std::vector<uint64_t> c(static_cast<size_t>(d_->k), 0);
  c[0] = reduce_signed(v, d_->p);
  return Elem(*this, std::move(c));
}

Elem Field::from_coeffs(std::span<const uint64_t> coeffs) const {
  std::vector<uint64_t> c(static_cast<size_t>(d_->k), 0);
  if (static_cast<int>(coeffs.size()) <= d_->k) {
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i] % d_->p;
    return Elem(*this, std::move(c));
  }
  RawPoly a(coeffs.begin(), coeffs.end());
  for (auto& v : a) v %= d_->p;
  raw_rem(a, d_->modulus, d_->p);
  std::copy(a.begin(), a.end(), c.begin());
  return Elem(*this, std::move(c));
}

Elem Field::from_signed(std::span<const int64_t> coeffs) const {
  std::vector<uint64_t> c;
  c.reserve(coeffs.size());
  for (int64_t v : coeffs) c.push_back(reduce_signed(v, d_->p));
  return from_coeffs(c);
}

Elem Field::generator() const {
  if (d_->k == 1) return zero();
  std::vector<uint64_t> c(static_cast<size_t>(d_->k), 0);
  c[1] = 1;
  return Elem(*this, std::move(c));
}

Elem Field::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<uint64_t> dist(0, d_->p - 1);
  std::vector<uint64_t> c(static_cast<size_t>(d_->k));
  for (auto& v : c) v = dist(rng);
  return Elem(*this, std::move(c));
}

Elem Field::random_nonzero(std::mt19937_64& rng) const {
  for (;;) {
    Elem e = random(rng);
    if (!e.is_zero()) return e;
  }
}

Elem Field::from_index(uint64_t n) const {
  std::vector<uint64_t> c(static_cast<size_t>(d_->k), 0);
  for (auto& v : c) {
    v = n % d_->p;
    n /= d_->p;
  }
  return Elem(*this, std::move(c));
}

std::string Field::describe() const {
  if (d_->k == 1) return "F_" + std::to_string(d_->p);
  Elem m(*this, std::vector<uint64_t>(d_->modulus.begin(), d_->modulus.end() - 1));
  std::ostringstream os;
  os << "F_" << d_->p << "[a]/(a^" << d_->k;
  std::string rest = m.to_string();
  if (rest != "0") os << "+" << rest;
  os << ")";
  return os.str();
}

void Field::add_raw(const uint64_t* a, const uint64_t* b, uint64_t* out) const {
  for (int i = 0; i < d_->k; ++i) out[i] = addmod(a[i], b[i], d_->p);
}

void Field::sub_raw(const uint64_t* a, const uint64_t* b, uint64_t* out) const {
  for (int i = 0; i < d_->k; ++i) out[i] = submod(a[i], b[i], d_->p);
}

void Field::mul_raw(const uint64_t* a, const uint64_t* b, uint64_t* out) const {
  const uint64_t p = d_->p;
  const int k = d_->k;
  if (k == 1) {
    out[0] = mulmod(a[0], b[0], p);
    return;
  }
  const uint64_t* m = d_->modulus.data();
  if (d_->lazy) {
    // Unreduced 128-bit accumulation: every slot receives at most 2k
    // products below p^2 < 2^120.
    std::array<unsigned __int128, 127> acc{};
    for (int i = 0; i < k; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < k; ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
    }
    for (int i = 2 * k - 2; i >= k; --i) {
      uint64_t c = static_cast<uint64_t>(acc[i] % p);
      if (c == 0) continue;
      uint64_t neg = p - c;
      for (int j = 0; j < k; ++j) acc[i - k + j] += static_cast<unsigned __int128>(neg) * m[j];
    }
    for (int i = 0; i < k; ++i) out[i] = static_cast<uint64_t>(acc[i] % p);
    return;
  }
  std::vector<uint64_t> t(static_cast<size_t>(2 * k - 1), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[i + j] = addmod(t[i + j], mulmod(a[i], b[j], p), p);
  for (int i = 2 * k - 2; i >= k; --i) {
    uint64_t c = t[i];
    if (c == 0) continue;
    for (int j = 0; j < k; ++j) t[i - k + j] = submod(t[i - k + j], mulmod(c, m[j], p), p);
  }
  std::copy(t.begin(), t.begin() + k, out);
}

bool Field::inv_raw(const uint64_t* a, uint64_t* out) const {
  const uint64_t p = d_->p;
  const int k = d_->k;
  if (k == 1) {
    if (a[0] == 0) return false;
    out[0] = invmod(a[0], p);
    return true;
  }
  // Extended Euclid keeping s1 * a == r1 (mod modulus).
  RawPoly r0 = d_->modulus, r1(a, a + k);
  raw_trim(r1);
  if (r1.empty()) return false;
  RawPoly s0, s1{1};
  while (r1.size() > 1) {
    RawPoly q(r0.size() - r1.size() + 1, 0);
    const uint64_t lead_inv = invmod(r1.back(), p);
    while (r0.size() >= r1.size()) {
      uint64_t c = mulmod(r0.back(), lead_inv, p);
      size_t shift = r0.size() - r1.size();
      q[shift] = c;
      for (size_t j = 0; j < r1.size(); ++j) r0[shift + j] = submod(r0[shift + j], mulmod(c, r1[j], p), p);
      raw_trim(r0);
    }
    if (r0.empty()) return false;
    RawPoly s(std::max(s0.size(), q.size() + s1.size()), 0);
    std::copy(s0.begin(), s0.end(), s.begin());
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s[i + j] = submod(s[i + j], mulmod(q[i], s1[j], p), p);
    }
    raw_trim(s);
    s0 = std::move(s1);
    s1 = std::move(s);
    std::swap(r0, r1);
  }
  const uint64_t c = invmod(r1[0], p);
  for (auto& v : s1) v = mulmod(v, c, p);
  raw_rem(s1, d_->modulus, p);
  std::fill(out, out + k, 0);
  std::copy(s1.begin(), s1.end(), out);
  return true;
}

// ---------------------------------------------------------------------------
// Elem

void Elem::check_same(const Elem& o) const {
  if (!(f_ == o.f_)) fail(Errc::InvalidInput, "field mismatch: " + f_.describe() + " vs " + o.f_.describe());
}

bool Elem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](uint64_t v) { return v == 0; });
}

bool Elem::is_one() const { return c_[0] == 1 && is_constant(); }

bool Elem::is_constant() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](uint64_t v) { return v == 0; });
}

Elem Elem::operator+(const Elem& o) const {
  check_same(o);
  std::vector<uint64_t> r(c_.size());
  f_.add_raw(c_.data(), o.c_.data(), r.data());
  return Elem(f_, std::move(r));
}

Elem Elem::operator-(const Elem& o) const {
  check_same(o);
  std::vector<uint64_t> r(c_.size());
  f_.sub_raw(c_.data(), o.c_.data(), r.data());
  return Elem(f_, std::move(r));
}

Elem Elem::operator*(const Elem& o) const {
  check_same(o);
  std::vector<uint64_t> r(c_.size());
  f_.mul_raw(c_.data(), o.c_.data(), r.data());
  return Elem(f_, std::move(r));
}

Elem Elem::operator-() const {
  std::vector<uint64_t> r(c_.size());
  const uint64_t p = f_.characteristic();
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] ? p - c_[i] : 0;
  return Elem(f_, std::move(r));
}

Elem Elem::scaled(uint64_t s) const {
  const uint64_t p = f_.characteristic();
  s %= p;
  std::vector<uint64_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = mulmod(c_[i], s, p);
  return Elem(f_, std::move(r));
}

Elem Elem::inv() const {
  std::vector<uint64_t> r(c_.size());
  if (!f_.inv_raw(c_.data(), r.data())) fail(Errc::InvalidInput, "inverse of zero");
  return Elem(f_, std::move(r));
}

Elem Elem::pow(uint64_t e) const {
  Elem r = f_.one(), b = *this;
  while (e) {
    if (e & 1U) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Elem Elem::pow(const WideUint& e) const {
  Elem r = f_.one();
  for (size_t i = e.bit_length(); i-- > 0;) {
    r *= r;
    if (e.bit(i)) r *= *this;
  }
  return r;
}

std::string Elem::to_string(char var) const {
  if (!valid()) return "<invalid>";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------

Elem frobenius_power(const Elem& x, const WideUint& q) {
  const uint64_t p = x.field().characteristic();
  WideUint t = q;
  unsigned j = 0;
  if (t.is_zero()) fail(Errc::BadPower, "exponent 0 is not a power of p");
  while (!(t == WideUint(1))) {
    if (t.mod_small(p) != 0) fail(Errc::BadPower, q.to_string() + " is not a power of " + std::to_string(p));
    t.div_small(p);
    ++j;
  }
  // Frobenius has order k on F_{p^k}.
  unsigned k = static_cast<unsigned>(x.field().degree());
  unsigned jj = j % k;
  Elem r = x;
  for (unsigned i = 0; i < jj; ++i) r = r.pow(p);
  return r;
}

Elem frobenius_power(const Elem& x, uint64_t q) { return frobenius_power(x, WideUint(q)); }

bool is_square(const Elem& x) {
  if (x.is_zero() || x.field().characteristic() == 2) return true;
  WideUint e = x.field().order();
  e.sub_small(1).shr1();
  return x.pow(e).is_one();
}

std::optional<Elem> sqrt(const Elem& x, std::mt19937_64& rng) {
  const Field& f = x.field();
  if (x.is_zero()) return x;
  if (f.characteristic() == 2) {
    WideUint e = f.order();
    e.shr1();
    return x.pow(e);
  }
  if (!is_square(x)) return std::nullopt;
  // Q - 1 = 2^s * t with t odd.
  WideUint t = f.order();
  t.sub_small(1);
  unsigned s = 0;
  while (!t.bit(0)) {
    t.shr1();
    ++s;
  }
  Elem z = f.random_nonzero(rng);
  while (is_square(z)) z = f.random_nonzero(rng);
  Elem c = z.pow(t);
  WideUint t1 = t;
  t1.add_small(1).shr1();
  Elem r = x.pow(t1);
  Elem u = x.pow(t);
  unsigned m = s;
  while (!u.is_one()) {
    unsigned i = 0;
    Elem w = u;
    while (!w.is_one()) {
      w *= w;
      ++i;
      if (i == m) fail(Errc::InvalidInput, "square root failed on a square");
    }
    Elem b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b *= b;
    r *= b;
    c = b * b;
    u *= c;
    m = i;
  }
  return r;
}

uint64_t multiplicative_order(const Elem& x, uint64_t n) {
  if (x.is_zero()) fail(Errc::InvalidInput, "order of zero");
  if (!x.pow(n).is_one()) fail(Errc::InvalidInput, "element order does not divide " + std::to_string(n));
  uint64_t ord = n, m = n;
  for (uint64_t d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    while (m % d == 0) m /= d;
    while (ord % d == 0 && x.pow(ord / d).is_one()) ord /= d;
  }
  if (m > 1)
    while (ord % m == 0 && x.pow(ord / m).is_one()) ord /= m;
  return ord;
}

uint64_t mu_l_dlog(const Elem& zeta, const Elem& v, uint64_t l) {
  if (zeta.is_one() || !zeta.pow(l).is_one()) fail(Errc::BadOrder, zeta.to_string() + " does not have order " + std::to_string(l));
  if (v.is_zero() || !v.pow(l).is_one()) fail(Errc::NotRootOfUnity, v.to_string() + " is not an l-th root of unity");
  Elem acc = zeta.field().one();
  for (uint64_t e = 0; e < l; ++e) {
    if (acc == v) return e;
    acc *= zeta;
  }
  fail(Errc::BadOrder, "generator does not reach " + v.to_string());
}

}  // namespace frobclass::ff

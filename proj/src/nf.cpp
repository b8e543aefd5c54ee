#include "frobclass/nf.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace frobclass::nf {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::SizeBound, "integer overflow");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::SizeBound, "integer overflow");
  return r;
}

}  // namespace

Rational::Rational(int64_t n, int64_t d) { *this = make(n, d); }

Rational Rational::make(__int128 n, __int128 d) {
  if (d == 0) fail(Errc::InvalidInput, "zero denominator");
  if (d < 0) n = -n, d = -d;
  __int128 g = gcd128(n, d);
  if (g > 1) n /= g, d /= g;
  if (!fits64(n) || !fits64(d)) fail(Errc::SizeBound, "rational coefficient exceeds 64 bits");
  Rational r;
  r.num_ = static_cast<int64_t>(n);
  r.den_ = static_cast<int64_t>(d);
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return make(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
              static_cast<__int128>(den_) * o.den_);
}
Rational Rational::operator-(const Rational& o) const { return *this + (-o); }
Rational Rational::operator*(const Rational& o) const {
  return make(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}
Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) fail(Errc::InvalidInput, "division by zero");
  return make(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}
Rational Rational::operator-() const { return make(-static_cast<__int128>(num_), den_); }

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
  auto parse_int = [&](const std::string& t) -> int64_t {
    size_t used = 0;
    int64_t v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      fail(Errc::InvalidInput, "not a rational number: '" + s + "'");
    }
    while (used < t.size() && std::isspace(static_cast<unsigned char>(t[used]))) ++used;
    if (used != t.size()) fail(Errc::InvalidInput, "not a rational number: '" + s + "'");
    return v;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

// ---------------------------------------------------------------------------
// Irreducibility over Q

namespace {

using IntPoly = std::vector<int64_t>;

int64_t eval_int(const IntPoly& f, int64_t x) {
  int64_t r = 0;
  for (size_t i = f.size(); i-- > 0;) r = checked_add(checked_mul(r, x), f[i]);
  return r;
}

std::vector<int64_t> positive_divisors(int64_t n) {
  if (n < 0) n = -n;
  if (n > (1LL << 40)) fail(Errc::SizeBound, "value too large to enumerate divisors");
  std::vector<int64_t> small, large;
  for (int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Exact division of f by a monic integer polynomial g; true if the remainder is 0.
// A true factor has a quotient far below 64 bits, so overflow means no.
bool divides_monic(const IntPoly& g, IntPoly f) {
  const size_t dg = g.size() - 1;
  for (size_t top = f.size(); top-- > dg;) {
    const int64_t c = f[top];
    if (!c) continue;
    for (size_t j = 0; j <= dg; ++j) {
      int64_t t, r;
      if (__builtin_mul_overflow(c, g[j], &t) || __builtin_sub_overflow(f[top - dg + j], t, &r)) return false;
      f[top - dg + j] = r;
    }
  }
  return std::all_of(f.begin(), f.end(), [](int64_t v) { return v == 0; });
}

// Subset sums of a degree multiset, as a bitmask over 0..d.
std::vector<bool> subset_sums(const std::vector<int>& degs, int d) {
  std::vector<bool> s(static_cast<size_t>(d) + 1, false);
  s[0] = true;
  for (int k : degs)
    for (int v = d; v >= k; --v)
      if (s[static_cast<size_t>(v - k)]) s[static_cast<size_t>(v)] = true;
  return s;
}

// Kronecker: is there a monic integer factor of degree e?
bool has_factor_of_degree(const IntPoly& f, int e) {
  // Evaluation points with few divisors first.
  std::vector<std::pair<size_t, int64_t>> pts;
  for (int64_t x = 0; pts.size() < static_cast<size_t>(3 * e + 4) && x < 64; x = x > 0 ? -x : -x + 1) {
    int64_t v = 0;
    try {
      v = eval_int(f, x);
    } catch (const Error&) {
      continue;
    }
    if (v == 0 || v > (1LL << 40) || v < -(1LL << 40)) continue;
    pts.push_back({positive_divisors(v).size(), x});
  }
  if (pts.size() < static_cast<size_t>(e)) fail(Errc::SizeBound, "no usable Kronecker evaluation points");
  std::stable_sort(pts.begin(), pts.end());
  pts.resize(static_cast<size_t>(e));
  std::vector<int64_t> xs;
  std::vector<std::vector<int64_t>> choices;
  double combos = 1;
  for (auto& pr : pts) {
    xs.push_back(pr.second);
    std::vector<int64_t> ds;
    for (int64_t d : positive_divisors(eval_int(f, pr.second))) {
      ds.push_back(d);
      ds.push_back(-d);
    }
    combos *= static_cast<double>(ds.size());
    choices.push_back(std::move(ds));
  }
  if (combos > 4e6) fail(Errc::SizeBound, "Kronecker search too large");

  // g = prod (x - x_i) + sum_i d_i L_i with L_i the Lagrange basis on xs.
  const size_t n = xs.size();
  std::vector<Rational> base(n + 1, Rational(0));
  base[0] = Rational(1);
  for (size_t i = 0; i < n; ++i) {
    std::vector<Rational> nb(n + 1, Rational(0));
    for (size_t k = 0; k < n; ++k) {
      nb[k + 1] = nb[k + 1] + base[k];
      nb[k] = nb[k] - base[k] * Rational(xs[i]);
    }
    base = nb;
  }
  std::vector<std::vector<Rational>> lag(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    std::vector<Rational> p(1, Rational(1));
    Rational denom(1);
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> np(p.size() + 1, Rational(0));
      for (size_t k = 0; k < p.size(); ++k) {
        np[k + 1] = np[k + 1] + p[k];
        np[k] = np[k] - p[k] * Rational(xs[j]);
      }
      p = np;
      denom = denom * Rational(xs[i] - xs[j]);
    }
    for (size_t k = 0; k < p.size(); ++k) lag[i][k] = p[k] / denom;
  }

  std::vector<size_t> idx(n, 0);
  for (;;) {
    std::vector<Rational> g = base;
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) g[k] = g[k] + lag[i][k] * Rational(choices[i][idx[i]]);
    bool integral = std::all_of(g.begin(), g.end(), [](const Rational& r) { return r.is_integer(); });
    if (integral) {
      IntPoly gi;
      for (const auto& r : g) gi.push_back(r.num());
      if (divides_monic(gi, f)) return true;
    }
    size_t pos = 0;
    while (pos < n && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
    if (pos == n) break;
  }
  return false;
}

}  // namespace

bool is_irreducible_over_q(const std::vector<int64_t>& f) {
  if (f.size() < 2) fail(Errc::InvalidInput, "polynomial of degree < 1");
  if (f.back() != 1) fail(Errc::NonMonic, "minimal polynomial must be monic");
  const int d = static_cast<int>(f.size()) - 1;
  if (d == 1) return true;
  if (f[0] == 0) return false;
  for (int64_t r : positive_divisors(f[0])) {
    if (eval_int(f, r) == 0 || eval_int(f, -r) == 0) return false;
  }
  if (d <= 3) return true;

  // Factor degrees over Q must be subset sums of every good reduction pattern.
  std::vector<bool> possible(static_cast<size_t>(d) + 1, true);
  int good = 0;
  std::mt19937_64 rng(ff::kDefaultSeed);
  for (uint64_t p = 3; p < 2000 && good < 40; p += 2) {
    if (!ff::is_prime(p)) continue;
    ff::Field fp = ff::Field::prime(p);
    ff::Poly fm = ff::Poly::from_signed(fp, f);
    if (ff::gcd(fm, fm.derivative()).degree() != 0) continue;
    ++good;
    std::vector<int> degs;
    for (const auto& g : ff::factor_squarefree(fm, rng)) degs.push_back(g.degree());
    auto s = subset_sums(degs, d);
    for (int k = 1; k < d; ++k) possible[static_cast<size_t>(k)] = possible[static_cast<size_t>(k)] && s[static_cast<size_t>(k)];
    bool any = false;
    for (int k = 1; k <= d / 2; ++k) any = any || possible[static_cast<size_t>(k)];
    if (!any) return true;
  }
  for (int e = 2; e <= d / 2; ++e) {
    if (!possible[static_cast<size_t>(e)]) continue;
    if (has_factor_of_degree(f, e)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

NumberField NumberField::create(const std::vector<int64_t>& minpoly) {
  if (minpoly.size() < 2) fail(Errc::InvalidInput, "minimal polynomial must have degree >= 1");
  if (minpoly.back() != 1) fail(Errc::NonMonic, "minimal polynomial must be monic");
  if (minpoly.size() - 1 > 12) fail(Errc::SizeBound, "number fields limited to degree 12");
  if (!is_irreducible_over_q(minpoly)) fail(Errc::Reducible, "minimal polynomial is reducible over Q");
  NumberField f;
  f.d_ = std::make_shared<const Data>(Data{minpoly});
  return f;
}

std::string NumberField::describe() const {
  std::ostringstream os;
  os << "Q[a]/(";
  bool first = true;
  for (size_t i = d_->minpoly.size(); i-- > 0;) {
    int64_t c = d_->minpoly[i];
    if (!c) continue;
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    int64_t ac = c < 0 ? -c : c;
    if (ac != 1 || i == 0) os << ac;
    if (i >= 1) os << "a";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  os << ")";
  return os.str();
}

NfElem::NfElem(NumberField f, std::vector<Rational> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  const size_t d = static_cast<size_t>(f_.degree());
  const auto& m = f_.minpoly();
  for (size_t top = c_.size(); top-- > d;) {
    const Rational c = c_[top];
    if (c.is_zero()) continue;
    for (size_t j = 0; j <= d; ++j) c_[top - d + j] = c_[top - d + j] - c * Rational(m[j]);
  }
  c_.resize(d, Rational(0));
}

NfElem NfElem::from_int(const NumberField& f, int64_t v) { return NfElem(f, {Rational(v)}); }

NfElem NfElem::alpha(const NumberField& f) { return NfElem(f, {Rational(0), Rational(1)}); }

bool NfElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool NfElem::is_one() const {
  if (c_.empty() || !(c_[0] == Rational(1))) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& r) { return r.is_zero(); });
}

NfElem NfElem::operator+(const NfElem& o) const {
  std::vector<Rational> r(c_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = c_[i] + o.c_[i];
  return NfElem(f_, std::move(r));
}

NfElem NfElem::operator-(const NfElem& o) const { return *this + (-o); }

NfElem NfElem::operator-() const {
  std::vector<Rational> r(c_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = -c_[i];
  return NfElem(f_, std::move(r));
}

NfElem NfElem::operator*(const NfElem& o) const {
  if (!(f_ == o.f_)) fail(Errc::InvalidInput, "elements of different number fields");
  std::vector<Rational> r(c_.size() + o.c_.size(), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
  }
  return NfElem(f_, std::move(r));
}

NfElem NfElem::pow(uint64_t e) const {
  NfElem r = from_int(f_, 1), b = *this;
  for (; e; e >>= 1) {
    if (e & 1) r = r * b;
    b = b * b;
  }
  return r;
}

std::string NfElem::to_string(char var) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    const bool neg = c.num() < 0;
    os << (neg ? (first ? "-" : " - ") : (first ? "" : " + "));
    Rational a = neg ? -c : c;
    if (i == 0 || !(a == Rational(1))) os << a.to_string() << (i ? "*" : "");
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return first ? "0" : os.str();
}

PrimeDatum prime_datum(const NumberField& field, uint64_t p, const std::vector<int64_t>& g) {
  if (!ff::is_prime(p)) fail(Errc::NonPrime, std::to_string(p) + " is not prime");
  if (g.size() < 2) fail(Errc::InvalidInput, "residue polynomial must have degree >= 1");
  if (ff::reduce_signed(g.back(), p) != 1) fail(Errc::NonMonic, "residue polynomial must be monic");
  ff::Field fp = ff::Field::prime(p);
  ff::Poly gp = ff::Poly::from_signed(fp, g);
  if (!ff::is_irreducible(gp)) fail(Errc::ReducibleResiduePoly, gp.to_string() + " is reducible mod " + std::to_string(p));
  ff::Poly mp = ff::Poly::from_signed(fp, field.minpoly());
  if (!(mp % gp).is_zero())
    fail(Errc::NotAFactor, gp.to_string() + " does not divide the minimal polynomial mod " + std::to_string(p));
  PrimeDatum pd;
  pd.field = field;
  pd.p = p;
  pd.g = gp.residues();
  pd.f = gp.degree();
  pd.residue = ff::Field::extension(p, pd.f, pd.g);
  pd.alpha_image = pd.f == 1 ? pd.residue.from_int(0) - pd.residue.from_coeffs(std::vector<uint64_t>{pd.g[0]})
                             : pd.residue.generator();
  WideUint q = pd.residue.order();
  if (!q.fits_u64() || q.to_u64() >> 63) fail(Errc::SizeBound, "residue field too large");
  pd.q = q.to_u64();
  return pd;
}

ff::Elem reduce_rational(const Rational& r, const PrimeDatum& pd) {
  const uint64_t den = ff::reduce_signed(r.den(), pd.p);
  if (den == 0) fail(Errc::DenominatorDividesP, r.to_string() + " has denominator divisible by " + std::to_string(pd.p));
  const uint64_t v = ff::mulmod(ff::reduce_signed(r.num(), pd.p), ff::invmod(den, pd.p), pd.p);
  return pd.residue.from_int(static_cast<int64_t>(v));
}

ff::Elem reduce_element(const NfElem& e, const PrimeDatum& pd) {
  if (!(e.field() == pd.field)) fail(Errc::InvalidInput, "element is not in the prime's number field");
  ff::Elem acc = pd.residue.zero();
  ff::Elem pw = pd.residue.one();
  for (const auto& c : e.coeffs()) {
    if (!c.is_zero()) acc += reduce_rational(c, pd) * pw;
    pw = pw * pd.alpha_image;
  }
  return acc;
}

ff::Poly reduce_poly(const std::vector<NfElem>& coeffs, const PrimeDatum& pd) {
  std::vector<ff::Elem> out;
  for (const auto& c : coeffs) out.push_back(reduce_element(c, pd));
  return ff::Poly(pd.residue, out);
}

GlobalPairingDatum GlobalPairingDatum::from_value(const NfElem& v, uint64_t l) {
  if (v.is_one() || !v.pow(l).is_one())
    fail(Errc::NotRootOfUnity, v.to_string() + " is not a nontrivial " + std::to_string(l) + "-th root of unity");
  GlobalPairingDatum g;
  g.value = v;
  return g;
}

GlobalPairingDatum GlobalPairingDatum::from_minpoly(const std::vector<NfElem>& m, uint64_t l) {
  if (m.size() < 2) fail(Errc::InvalidInput, "pairing minimal polynomial must have degree >= 1");
  if (!m.back().is_one()) fail(Errc::NonMonic, "pairing minimal polynomial must be monic");
  const uint64_t deg = m.size() - 1;
  if ((l - 1) % deg != 0)
    fail(Errc::InvalidInput, "degree " + std::to_string(deg) + " does not divide " + std::to_string(l - 1));
  GlobalPairingDatum g;
  g.minpoly = m;
  return g;
}

std::string GlobalPairingDatum::to_string() const {
  if (value) return value->to_string();
  std::string s = "[";
  for (size_t i = 0; i < minpoly->size(); ++i) s += (i ? ", " : "") + (*minpoly)[i].to_string();
  return s + "]";
}

ff::Poly orbit_polynomial(const ff::Elem& zeta, const std::vector<uint64_t>& exponents) {
  const ff::Field& f = zeta.field();
  ff::Poly r = ff::Poly::constant(f.one());
  for (uint64_t s : exponents) r = r * (ff::Poly::x(f) - ff::Poly::constant(zeta.pow(s)));
  return r;
}

}  // namespace frobclass::nf

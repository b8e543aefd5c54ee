#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "frobclass/errors.hpp"
#include "frobclass/wide_uint.hpp"

namespace frobclass::ff {

inline constexpr uint64_t kDefaultSeed = 0x5eed'f20b'c1a5'5ULL;

// Word-sized modular arithmetic. All operands are assumed reduced mod p.
inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return (s >= p || s < a) ? s - p : s;
}
inline uint64_t submod(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + (p - b); }
uint64_t powmod(uint64_t a, uint64_t e, uint64_t p);
// Inverse by Fermat's little theorem; p must be prime and a nonzero.
uint64_t invmod(uint64_t a, uint64_t p);
uint64_t reduce_signed(int64_t v, uint64_t p);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(uint64_t n);

// Euler's criterion for u in [1, l). Throws ZeroResidue for u == 0 mod l.
bool is_square_mod_l(uint64_t u, uint64_t l);

// A subgroup of (Z/l)^x, stored as its sorted element list.
class ResidueSubgroup {
 public:
  static ResidueSubgroup trivial(uint64_t l);
  static ResidueSubgroup all(uint64_t l);
  static ResidueSubgroup squares(uint64_t l);
  // The unique subgroup of index m; m must divide l - 1.
  static ResidueSubgroup of_index(uint64_t l, uint64_t m);
  static ResidueSubgroup generated_by(uint64_t l, std::span<const uint64_t> gens);

  uint64_t modulus() const { return l_; }
  uint64_t order() const { return elems_.size(); }
  uint64_t index() const { return (l_ - 1) / elems_.size(); }
  bool contains(uint64_t u) const;
  const std::vector<uint64_t>& elements() const { return elems_; }

  friend bool operator==(const ResidueSubgroup&, const ResidueSubgroup&) = default;

 private:
  ResidueSubgroup(uint64_t l, std::vector<uint64_t> elems) : l_(l), elems_(std::move(elems)) {}
  uint64_t l_ = 0;
  std::vector<uint64_t> elems_;
};

class Elem;

// Descriptor of F_p or F_{p^k} = F_p[x]/(modulus). Cheap to copy; immutable.
// Degree one uses the modulus x, so the prime field is its own polynomial basis.
class Field {
 public:
  Field() = default;

  static Field prime(uint64_t p);
  // Builds F_{p^k}. With no modulus, a monic irreducible one is found by a
  // seeded random search; an explicit modulus is validated for irreducibility.
  static Field extension(uint64_t p, int k, std::optional<std::vector<uint64_t>> modulus = {},
                         uint64_t seed = kDefaultSeed);
  // Convenience: modulus with signed integer coefficients, little-endian.
  static Field extension_signed(uint64_t p, const std::vector<int64_t>& modulus);

  bool valid() const { return d_ != nullptr; }
  uint64_t characteristic() const { return d_->p; }
  int degree() const { return d_->k; }
  const std::vector<uint64_t>& modulus() const { return d_->modulus; }
  // Field size p^k.
  const WideUint& order() const { return d_->order; }

  Elem zero() const;
  Elem one() const;
  Elem from_int(int64_t v) const;
  Elem from_coeffs(std::span<const uint64_t> coeffs) const;
  Elem from_signed(std::span<const int64_t> coeffs) const;
  // The class of x in F_p[x]/(modulus).
  Elem generator() const;
  Elem random(std::mt19937_64& rng) const;
  Elem random_nonzero(std::mt19937_64& rng) const;
  // Element with coefficient vector equal to the base-p digits of n.
  Elem from_index(uint64_t n) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.d_ == b.d_ || (a.d_ && b.d_ && a.d_->p == b.d_->p && a.d_->modulus == b.d_->modulus);
  }

  std::string describe() const;

  // Raw kernels over length-k coefficient arrays; used by Elem and Poly.
  void mul_raw(const uint64_t* a, const uint64_t* b, uint64_t* out) const;
  void add_raw(const uint64_t* a, const uint64_t* b, uint64_t* out) const;
  void sub_raw(const uint64_t* a, const uint64_t* b, uint64_t* out) const;
  bool inv_raw(const uint64_t* a, uint64_t* out) const;

 private:
  struct Data {
    uint64_t p = 0;
    int k = 1;
    std::vector<uint64_t> modulus;
    WideUint order;
    bool lazy = false;
  };
  explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static Field make(uint64_t p, std::vector<uint64_t> modulus);

  std::shared_ptr<const Data> d_;
};

class Elem {
 public:
  Elem() = default;
  Elem(Field f, std::vector<uint64_t> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {}

  const Field& field() const { return f_; }
  const std::vector<uint64_t>& coeffs() const { return c_; }
  bool valid() const { return f_.valid(); }

  bool is_zero() const;
  bool is_one() const;
  // True if the element lies in the prime subfield.
  bool is_constant() const;
  uint64_t constant_term() const { return c_[0]; }

  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator*(const Elem& o) const;
  Elem operator/(const Elem& o) const { return *this * o.inv(); }
  Elem operator-() const;
  Elem& operator+=(const Elem& o) { return *this = *this + o; }
  Elem& operator-=(const Elem& o) { return *this = *this - o; }
  Elem& operator*=(const Elem& o) { return *this = *this * o; }
  Elem scaled(uint64_t s) const;

  // Throws InvalidInput for zero.
  Elem inv() const;
  Elem pow(uint64_t e) const;
  Elem pow(const WideUint& e) const;

  friend bool operator==(const Elem& a, const Elem& b) { return a.c_ == b.c_ && a.f_ == b.f_; }
  friend bool operator<(const Elem& a, const Elem& b) { return a.c_ < b.c_; }

  // e.g. "8a^2+12a+3"; prime field elements print as plain integers.
  std::string to_string(char var = 'a') const;

 private:
  void check_same(const Elem& o) const;
  Field f_;
  std::vector<uint64_t> c_;
};

// Field embedding src -> dst fixed by the image of src's generator, which must
// be a root of src's modulus in dst. Prime fields embed with any image.
class Embedding {
 public:
  Embedding() = default;
  Embedding(Field src, Field dst, Elem gen_image);
  // Identity-like embedding of a prime field into one of its extensions.
  static Embedding from_prime(const Field& src, const Field& dst);
  // Finds a root of src's modulus in dst (seeded) and uses it.
  static Embedding find(const Field& src, const Field& dst, uint64_t seed = kDefaultSeed);

  const Field& source() const { return src_; }
  const Field& target() const { return dst_; }
  const Elem& generator_image() const { return img_; }
  Elem operator()(const Elem& x) const;

 private:
  Field src_, dst_;
  Elem img_;
  std::vector<Elem> powers_;
};

// x^q, where q must be a power of the characteristic (BadPower otherwise).
Elem frobenius_power(const Elem& x, const WideUint& q);
Elem frobenius_power(const Elem& x, uint64_t q);

bool is_square(const Elem& x);
// Tonelli-Shanks; nullopt for non-squares.
std::optional<Elem> sqrt(const Elem& x, std::mt19937_64& rng);

// Multiplicative order of a nonzero element dividing n (n given with its
// factorisation implied by trial division; n must fit in 64 bits).
uint64_t multiplicative_order(const Elem& x, uint64_t n);

// Exponent e in [0, l) with zeta^e == v; zeta must have exact order l.
uint64_t mu_l_dlog(const Elem& zeta, const Elem& v, uint64_t l);

}  // namespace frobclass::ff

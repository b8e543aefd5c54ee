#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace frobclass {

// Unsigned integer of arbitrary width, used only for exponents such as
// (p^k - 1) / 2 when an extension field outgrows 64 bits. Supports just the
// handful of operations exponentiation and order bookkeeping need.
class WideUint {
 public:
  WideUint() = default;
  WideUint(uint64_t v) {  // NOLINT(google-explicit-constructor)
    if (v) limbs_.push_back(v);
  }

  static WideUint power(uint64_t base, unsigned exp) {
    WideUint r(1);
    for (unsigned i = 0; i < exp; ++i) r.mul_small(base);
    return r;
  }

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const { return limbs_.size() <= 1; }
  uint64_t to_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

  size_t bit_length() const {
    if (limbs_.empty()) return 0;
    uint64_t top = limbs_.back();
    size_t bits = 64 - static_cast<size_t>(__builtin_clzll(top));
    return (limbs_.size() - 1) * 64 + bits;
  }

  bool bit(size_t i) const {
    size_t w = i / 64;
    if (w >= limbs_.size()) return false;
    return (limbs_[w] >> (i % 64)) & 1U;
  }

  WideUint& mul_small(uint64_t m) {
    unsigned __int128 carry = 0;
    for (auto& limb : limbs_) {
      unsigned __int128 t = static_cast<unsigned __int128>(limb) * m + carry;
      limb = static_cast<uint64_t>(t);
      carry = t >> 64;
    }
    if (carry) limbs_.push_back(static_cast<uint64_t>(carry));
    trim();
    return *this;
  }

  WideUint& add_small(uint64_t a) {
    for (size_t i = 0; a && i < limbs_.size(); ++i) {
      uint64_t before = limbs_[i];
      limbs_[i] += a;
      a = limbs_[i] < before ? 1 : 0;
    }
    if (a) limbs_.push_back(a);
    return *this;
  }

  // Requires *this >= a.
  WideUint& sub_small(uint64_t a) {
    for (size_t i = 0; a && i < limbs_.size(); ++i) {
      uint64_t before = limbs_[i];
      limbs_[i] -= a;
      a = before < a ? 1 : 0;
    }
    trim();
    return *this;
  }

  // Divides in place and returns the remainder.
  uint64_t div_small(uint64_t d) {
    unsigned __int128 rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
      unsigned __int128 cur = (rem << 64) | limbs_[i];
      limbs_[i] = static_cast<uint64_t>(cur / d);
      rem = cur % d;
    }
    trim();
    return static_cast<uint64_t>(rem);
  }

  uint64_t mod_small(uint64_t d) const {
    unsigned __int128 rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) rem = ((rem << 64) | limbs_[i]) % d;
    return static_cast<uint64_t>(rem);
  }

  WideUint& shr1() {
    for (size_t i = 0; i < limbs_.size(); ++i) {
      limbs_[i] >>= 1;
      if (i + 1 < limbs_.size()) limbs_[i] |= limbs_[i + 1] << 63;
    }
    trim();
    return *this;
  }

  friend bool operator==(const WideUint& a, const WideUint& b) { return a.limbs_ == b.limbs_; }
  friend bool operator<(const WideUint& a, const WideUint& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
    return std::lexicographical_compare(a.limbs_.rbegin(), a.limbs_.rend(), b.limbs_.rbegin(),
                                        b.limbs_.rend());
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    WideUint t = *this;
    std::string s;
    while (!t.is_zero()) s.push_back(static_cast<char>('0' + t.div_small(10)));
    std::reverse(s.begin(), s.end());
    return s;
  }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<uint64_t> limbs_;
};

}  // namespace frobclass

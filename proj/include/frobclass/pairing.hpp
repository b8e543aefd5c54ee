#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "frobclass/ec.hpp"

namespace frobclass::pairing {

using ec::Curve;
using ec::Elem;
using ec::Point;

// Weil pairing e_l(P, Q) by Miller's algorithm. The divisor of Q is shifted
// by a random point S (seeded) and the evaluation retried with a fresh S, up
// to 16 times, whenever a line function vanishes at an evaluation point:
//   e(P, Q) = f_P(Q + S) f_Q(-S) / (f_P(S) f_Q(P - S)),  div f_X = l(X) - l(O).
// Throws NotTorsion, OffCurve, DegenerateAfterRetries.
Elem weil_pairing(const Curve& e, const Point& p, const Point& q, uint64_t l, uint64_t seed = ff::kDefaultSeed);

// f_P(T) for div f_P = n(P) - n(O), as numerator / denominator of the line
// products; nullopt if either vanishes.
std::optional<Elem> miller(const Curve& e, const Point& p, uint64_t n, const Point& t);

// Pluggable pairing, used by the self-test to inject faults.
using PairingFn = std::function<Elem(const Curve&, const Point&, const Point&, uint64_t, uint64_t)>;
inline Elem default_pairing(const Curve& e, const Point& p, const Point& q, uint64_t l, uint64_t seed) {
  return weil_pairing(e, p, q, l, seed);
}

// The h in H with global = local^h, if any. Both must be l-th roots of unity
// in the same field and local must have exact order l (OrderMismatch).
std::optional<uint64_t> pairing_power_exponent(const Elem& global, const Elem& local, uint64_t l,
                                               const ff::ResidueSubgroup& h);
bool pairing_power_class(const Elem& global, const Elem& local, uint64_t l, const ff::ResidueSubgroup& h);

// Checks v^l = 1 and v != 1 (OrderMismatch otherwise).
void require_exact_order(const Elem& v, uint64_t l, const char* what);

}  // namespace frobclass::pairing

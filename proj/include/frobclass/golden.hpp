#pragma once

#include "frobclass/classify.hpp"

namespace frobclass::golden {

// y^2 = x^3 + x + 1 over Q(zeta_3), l = 3, prime (13, x - 3), global value
// zeta_3, with the cubic torsion field x^3 + 2x - 2 and the worked basis.
classify::ClassificationJob zeta3_job(bool with_basis = true);

// y^2 + y = x^3 - x^2 over Q(sqrt 5), l = 5, prime (31, x - 6), global
// minimal polynomial x^2 + ((1 - sqrt 5)/2) x + 1, thm2 mode, with the
// quintic torsion field x^5 + 7x + 28 and the worked basis.
classify::ClassificationJob sqrt5_job(bool with_basis = true);

}  // namespace frobclass::golden

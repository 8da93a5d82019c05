#pragma once

#include "shivar/rational.hpp"
#include "shivar/types.hpp"

namespace shivar {

// Exact determinant of an integer matrix (fraction-free Bareiss elimination).
Int int_determinant(const IntMatrix& m);

// Adjugate (transpose of the cofactor matrix), so that m * adj = det * id.
IntMatrix int_adjugate(const IntMatrix& m);

// Inverse of an integer matrix with det = +/-1. Throws InternalError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Exactly one +/-1 per row and per column, zeros elsewhere.
bool is_signed_permutation(const IntMatrix& m);

RationalMatrix to_rational(const IntMatrix& m);
RationalVector to_rational(const IntVector& v);

}  // namespace shivar

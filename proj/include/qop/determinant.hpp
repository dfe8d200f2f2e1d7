#pragma once

#include <vector>

#include "qop/rational.hpp"

namespace qop {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

/// Fraction-free (Bareiss) elimination with row pivoting. Every division is
/// exact, so the entries stay integral throughout.
BigInt bareiss_determinant(Matrix<BigInt> m);

/// Determinant of a rational matrix: each row is scaled to integers, the
/// integer determinant is taken by Bareiss, and the row scales are divided
/// back out. The empty matrix has determinant 1.
Rational determinant(const Matrix<Rational>& m);

}  // namespace qop

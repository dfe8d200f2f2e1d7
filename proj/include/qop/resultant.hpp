#pragma once

#include "qop/determinant.hpp"
#include "qop/poly.hpp"

namespace qop {

/// Sylvester matrix of f (degree n) and g (degree m): m shifted rows of f's
/// coefficients followed by n shifted rows of g's, highest degree first.
Matrix<Rational> sylvester_matrix(const Poly& f, const Poly& g);

/// Res(f, g) as the Sylvester determinant. Two constants give 1; a constant
/// b against f of degree n gives b^n.
Rational resultant(const Poly& f, const Poly& g);

/// Res(f, g) by Euclidean remainder reduction, using
/// Res(g, f) = lc(g)^(deg f - deg r) Res(g, r) for f = q g + r.
/// Shares no code path with resultant(); kept as a cross-check.
Rational resultant_oracle(const Poly& f, const Poly& g);

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f), n = deg f >= 1.
Rational discriminant(const Poly& f);

/// Discriminant of f read as a degree-`n` form (coefficients above deg f are
/// zero). Evaluated as the reduced Sylvester determinant of (f, f'), which
/// stays polynomial in the coefficients when the nominal leading one is 0.
Rational discriminant_padded(const Poly& f, int n);

/// x -> f(a x + b), expanded exactly.
inline Poly affine_substitute(const Poly& f, const Rational& a, const Rational& b) {
    return f.affine_substitute(a, b);
}

}  // namespace qop

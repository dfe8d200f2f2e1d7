#pragma once

#include <string>
#include <vector>

#include "qop/poly.hpp"

namespace qop {

enum class FamilyKind { Jacobi, Laguerre, Hermite, Gegenbauer, ChebyshevT, ChebyshevU };

/// One instance of a classical family. Parameters are validated on
/// construction: Jacobi/Laguerre parameters may not be negative integers, and
/// the Gegenbauer lambda must be nonzero with 2*lambda not a nonpositive integer.
class FamilySpec {
public:
    static FamilySpec jacobi(const Rational& alpha, const Rational& beta);
    static FamilySpec laguerre(const Rational& alpha);
    static FamilySpec hermite();
    static FamilySpec gegenbauer(const Rational& lambda);
    static FamilySpec chebyshev_t();
    static FamilySpec chebyshev_u();

    FamilyKind kind() const { return kind_; }
    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    const Rational& lambda() const { return lambda_; }

    /// e.g. "jacobi(1/2,1/3)", "hermite".
    std::string describe() const;

    /// Families whose members satisfy Phi_n(-x) = (-1)^n Phi_n(x).
    bool has_parity() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

private:
    FamilySpec(FamilyKind k, Rational a, Rational b, Rational l)
        : kind_(k), alpha_(std::move(a)), beta_(std::move(b)), lambda_(std::move(l)) {}

    FamilyKind kind_;
    Rational alpha_;
    Rational beta_;
    Rational lambda_;
};

/// Coefficients of Phi_m = (a x + b) Phi_{m-1} - c Phi_{m-2}.
struct RecurrenceCoeffs {
    Rational a;
    Rational b;
    Rational c;

    friend bool operator==(const RecurrenceCoeffs&, const RecurrenceCoeffs&) = default;
};

/// Rising factorial (lambda)_n; (lambda)_0 = 1.
Rational pochhammer(const Rational& lambda, int n);

/// binom(z, k) for rational z, as (z - k + 1)_k / k!.
Rational binomial(const Rational& z, int k);

/// The degree-n member of the family, built from its closed form (Chebyshev
/// members from their integer recurrences).
Poly polynomial(const FamilySpec& spec, int n);

/// (a_m, b_m, c_m) for m >= 1. The c_1 entry multiplies the nonexistent
/// Phi_{-1}; it is returned for completeness and only ever raised to the 0th
/// power.
RecurrenceCoeffs recurrence_coeffs(const FamilySpec& spec, int m);

/// Phi_n + c Phi_{n-1}, n >= 1.
Poly quasi(const FamilySpec& spec, int n, const Rational& c);

/// LHS - RHS of each derivative identity the family satisfies at degree n
/// (Jacobi: two identities, Laguerre and Hermite: one). Every entry is the
/// zero polynomial. Throws NotApplicable for Gegenbauer and Chebyshev.
std::vector<Poly> derivative_identity_residuals(const FamilySpec& spec, int n);

}  // namespace qop

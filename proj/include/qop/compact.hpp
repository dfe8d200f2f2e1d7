#pragma once

#include <vector>

#include "qop/families.hpp"

namespace qop {

/// The recurrence coefficient sequence (a_m, b_m, c_m), m = 1..size().
/// Requires a_m != 0 for all m and c_m != 0 for m >= 2 (c_1 is never used).
class GeneralRecurrence {
public:
    explicit GeneralRecurrence(std::vector<RecurrenceCoeffs> coeffs);

    /// Coefficients m = 1..n taken from a classical family.
    static GeneralRecurrence from_family(const FamilySpec& spec, int n);

    int size() const { return static_cast<int>(coeffs_.size()); }
    /// Entry for degree m (1-based).
    const RecurrenceCoeffs& at(int m) const { return coeffs_.at(static_cast<std::size_t>(m - 1)); }

    /// Phi_n + c Phi_{n-1} generated by running the recurrence from Phi_0 = 1.
    Poly quasi(int n, const Rational& c) const;

private:
    std::vector<RecurrenceCoeffs> coeffs_;
};

/// Derivative structure rho Phi_n' = (A x + B) Phi_n + C Phi_{n-1},
/// rho Phi_{n-1}' = (D x + E) Phi_{n-1} + F Phi_n at a fixed degree n.
struct DerivativeRelation {
    Poly rho;
    Rational A, B, C, D, E, F;
};

/// Hard-coded derivative relation of a classical family at degree n >= 1.
DerivativeRelation derivative_relation(const FamilySpec& spec, int n);

/// Quantities of Phi_n that the general discriminant formula consumes.
struct DiscContext {
    Rational leading;       ///< leading coefficient l_n of Phi_n
    Rational res_n_nm1;     ///< Res(Phi_n, Phi_{n-1})
};

/// prod_{k=1..n} Phi_{n-1}(y_k) over the zeros y_k of Phi_n, in closed form:
/// (-1)^(n(n-1)/2) prod a_k^(n-2k+1) c_k^(k-1).
Rational schur_product(const GeneralRecurrence& rec, int n);

/// Res(Phi_{n;s}, Phi_{n-1;t}) for a generic three-term sequence. phi_ns must
/// be Phi_n + s Phi_{n-1} built from the same recurrence. t = 0 uses the
/// s-independent closed product.
Rational res_general(const GeneralRecurrence& rec, int n, const Rational& s, const Rational& t,
                     const Poly& phi_ns);

/// Res(quasi(spec,n,s), quasi(spec,n-1,t)) by the family's closed formula.
Rational res_family(const FamilySpec& spec, int n, const Rational& s, const Rational& t);

/// disc(Phi_{n;c}) from a derivative relation; throws PoleEncountered when
/// c = 0 or Res(Phi_{n;c}, rho) = 0.
Rational disc_general(const DerivativeRelation& rel, const DiscContext& ctx, int n, const Rational& c,
                      const Poly& phi_nc);

/// True when the family's compact discriminant formula is singular at c.
bool disc_formula_has_pole(const FamilySpec& spec, int n, const Rational& c);

/// The rational values of c != 0 at which the compact discriminant formula
/// of the family is singular, ascending.
std::vector<Rational> disc_formula_poles(const FamilySpec& spec, int n);

/// disc(quasi(spec, n, c)). Uses the family's compact formula, the c = 0
/// closed forms where they exist, and the Sylvester discriminant at poles.
Rational disc_family(const FamilySpec& spec, int n, const Rational& c);

/// c -> disc(quasi(spec, n, c)) as a polynomial of degree 2(n-1), recovered by
/// interpolating disc_family at 2n-1 pole-free sample points.
Poly disc_as_poly_in_c(const FamilySpec& spec, int n);

/// Closed-form discriminant of the plain orthogonal polynomial (the c -> 0
/// limit): Jacobi and Laguerre (Stieltjes) and Hermite (Hilbert).
Rational stieltjes_hilbert_limit(const FamilySpec& spec, int n);

}  // namespace qop

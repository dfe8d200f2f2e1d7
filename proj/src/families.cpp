#include "qop/families.hpp"

#include "qop/errors.hpp"

namespace qop {

namespace {

bool is_negative_integer(const Rational& v) { return v.is_integer() && v.sign() < 0; }

void require_degree(int n, int min) {
    if (n < min) throw InvalidParameter("degree " + std::to_string(n) + " below " + std::to_string(min));
}

Rational factorial(int n) {
    Rational f(1);
    for (int k = 2; k <= n; ++k) f *= Rational(k);
    return f;
}

Poly x_power(const Poly& base, int k) {
    Poly out = Poly::constant(1);
    for (int i = 0; i < k; ++i) out = out * base;
    return out;
}

Poly jacobi_closed_form(const Rational& alpha, const Rational& beta, int n) {
    const Poly xm = Poly({Rational(-1, 2), Rational(1, 2)});  // (x - 1) / 2
    const Poly xp = Poly({Rational(1, 2), Rational(1, 2)});   // (x + 1) / 2
    Poly out;
    for (int m = 0; m <= n; ++m) {
        const Rational w = binomial(Rational(n) + alpha, m) * binomial(Rational(n) + beta, n - m);
        out += w * (x_power(xm, n - m) * x_power(xp, m));
    }
    return out;
}

Poly laguerre_closed_form(const Rational& alpha, int n) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        c[static_cast<std::size_t>(k)] =
            binomial(Rational(n) + alpha, n - k) * Rational(sign_power(k)) / factorial(k);
    }
    return Poly(std::move(c));
}

Poly hermite_closed_form(int n) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; 2 * k <= n; ++k) {
        const Rational w = Rational(sign_power(k)) * factorial(n) / (factorial(k) * factorial(n - 2 * k));
        c[static_cast<std::size_t>(n - 2 * k)] = w * pow(Rational(2), n - 2 * k);
    }
    return Poly(std::move(c));
}

Poly gegenbauer_closed_form(const Rational& lambda, int n) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; 2 * k <= n; ++k) {
        const Rational w = Rational(sign_power(k)) * pochhammer(lambda, n - k) /
                           (factorial(k) * factorial(n - 2 * k));
        c[static_cast<std::size_t>(n - 2 * k)] = w * pow(Rational(2), n - 2 * k);
    }
    return Poly(std::move(c));
}

/// T_m or U_m from the shared recurrence 2x P_{m-1} - P_{m-2}.
Poly chebyshev(int n, const Poly& first) {
    if (n == 0) return Poly::constant(1);
    Poly prev = Poly::constant(1);
    Poly cur = first;
    const Poly two_x({0, 2});
    for (int m = 2; m <= n; ++m) {
        Poly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

FamilySpec FamilySpec::jacobi(const Rational& alpha, const Rational& beta) {
    if (is_negative_integer(alpha) || is_negative_integer(beta)) {
        throw InvalidParameter("Jacobi parameters must not be negative integers");
    }
    return FamilySpec(FamilyKind::Jacobi, alpha, beta, 0);
}

FamilySpec FamilySpec::laguerre(const Rational& alpha) {
    if (is_negative_integer(alpha)) throw InvalidParameter("Laguerre alpha must not be a negative integer");
    return FamilySpec(FamilyKind::Laguerre, alpha, 0, 0);
}

FamilySpec FamilySpec::hermite() { return FamilySpec(FamilyKind::Hermite, 0, 0, 0); }

FamilySpec FamilySpec::gegenbauer(const Rational& lambda) {
    const Rational twice = Rational(2) * lambda;
    if (lambda.is_zero() || (twice.is_integer() && twice.sign() <= 0)) {
        throw InvalidParameter("Gegenbauer lambda must be nonzero with 2*lambda not a nonpositive integer");
    }
    return FamilySpec(FamilyKind::Gegenbauer, 0, 0, lambda);
}

FamilySpec FamilySpec::chebyshev_t() { return FamilySpec(FamilyKind::ChebyshevT, 0, 0, 0); }
FamilySpec FamilySpec::chebyshev_u() { return FamilySpec(FamilyKind::ChebyshevU, 0, 0, 0); }

std::string FamilySpec::describe() const {
    switch (kind_) {
        case FamilyKind::Jacobi: return "jacobi(" + alpha_.to_string() + "," + beta_.to_string() + ")";
        case FamilyKind::Laguerre: return "laguerre(" + alpha_.to_string() + ")";
        case FamilyKind::Hermite: return "hermite";
        case FamilyKind::Gegenbauer: return "gegenbauer(" + lambda_.to_string() + ")";
        case FamilyKind::ChebyshevT: return "chebyshev-t";
        case FamilyKind::ChebyshevU: return "chebyshev-u";
    }
    return "?";
}

bool FamilySpec::has_parity() const {
    switch (kind_) {
        case FamilyKind::Hermite:
        case FamilyKind::Gegenbauer:
        case FamilyKind::ChebyshevT:
        case FamilyKind::ChebyshevU: return true;
        case FamilyKind::Jacobi: return alpha_ == beta_;
        case FamilyKind::Laguerre: return false;
    }
    return false;
}

Rational pochhammer(const Rational& lambda, int n) {
    if (n < 0) throw InvalidParameter("pochhammer needs n >= 0");
    Rational out(1);
    for (int k = 0; k < n; ++k) out *= lambda + Rational(k);
    return out;
}

Rational binomial(const Rational& z, int k) {
    if (k < 0) return Rational(0);
    return pochhammer(z - Rational(k - 1), k) / factorial(k);
}

Poly polynomial(const FamilySpec& spec, int n) {
    require_degree(n, 0);
    switch (spec.kind()) {
        case FamilyKind::Jacobi: return jacobi_closed_form(spec.alpha(), spec.beta(), n);
        case FamilyKind::Laguerre: return laguerre_closed_form(spec.alpha(), n);
        case FamilyKind::Hermite: return hermite_closed_form(n);
        case FamilyKind::Gegenbauer: return gegenbauer_closed_form(spec.lambda(), n);
        case FamilyKind::ChebyshevT: return chebyshev(n, Poly::x());
        case FamilyKind::ChebyshevU: return chebyshev(n, Poly({0, 2}));
    }
    throw InvalidParameter("unknown family");
}

RecurrenceCoeffs recurrence_coeffs(const FamilySpec& spec, int m) {
    require_degree(m, 1);
    const Rational mm(m);
    switch (spec.kind()) {
        case FamilyKind::Jacobi: {
            const Rational& a = spec.alpha();
            const Rational& b = spec.beta();
            const Rational s = a + b;
            if (m == 1) {
                // P_1 = ((s + 2) x + a - b) / 2 read off directly; the general
                // formula is 0/0 when s is 0 or -1.
                return {(s + Rational(2)) / Rational(2), (a - b) / Rational(2), 0};
            }
            const Rational k = Rational(2) * mm + s;  // 2m + a + b
            const Rational den = Rational(2) * mm * (mm + s) * (k - Rational(2));
            if (den.is_zero()) throw InvalidParameter("Jacobi recurrence degenerates at m=" + std::to_string(m));
            RecurrenceCoeffs r{(k - Rational(1)) * k / (Rational(2) * mm * (mm + s)),
                               (k - Rational(1)) * (a * a - b * b) / den,
                               (mm + a - Rational(1)) * (mm + b - Rational(1)) * k /
                                   (mm * (mm + s) * (k - Rational(2)))};
            if (r.a.is_zero() || r.c.is_zero()) {
                throw InvalidParameter("Jacobi recurrence degenerates at m=" + std::to_string(m));
            }
            return r;
        }
        case FamilyKind::Laguerre: {
            const Rational& a = spec.alpha();
            return {Rational(-1) / mm, (Rational(2) * mm + a - Rational(1)) / mm, (mm + a - Rational(1)) / mm};
        }
        case FamilyKind::Hermite: return {2, 0, Rational(2) * (mm - Rational(1))};
        case FamilyKind::Gegenbauer: {
            const Rational& l = spec.lambda();
            return {Rational(2) * (mm + l - Rational(1)) / mm, 0, (mm + Rational(2) * l - Rational(2)) / mm};
        }
        case FamilyKind::ChebyshevT: return {m == 1 ? 1 : 2, 0, 1};
        case FamilyKind::ChebyshevU: return {2, 0, 1};
    }
    throw InvalidParameter("unknown family");
}

Poly quasi(const FamilySpec& spec, int n, const Rational& c) {
    require_degree(n, 1);
    return polynomial(spec, n) + c * polynomial(spec, n - 1);
}

std::vector<Poly> derivative_identity_residuals(const FamilySpec& spec, int n) {
    require_degree(n, 1);
    const Poly pn = polynomial(spec, n);
    const Poly pm = polynomial(spec, n - 1);
    const Rational nn(n);
    switch (spec.kind()) {
        case FamilyKind::Jacobi: {
            const Rational& a = spec.alpha();
            const Rational& b = spec.beta();
            const Rational s = a + b;
            const Poly one_minus_x2({1, 0, -1});
            // (2n+a+b)(1-x^2) P_n' = -n((2n+a+b)x + b - a) P_n + 2(n+a)(n+b) P_{n-1}
            const Rational k = Rational(2) * nn + s;
            const Poly lhs_a = k * (one_minus_x2 * pn.derivative());
            const Poly rhs_a = (-nn) * (Poly({b - a, k}) * pn) +
                               Rational(2) * (nn + a) * (nn + b) * pm;
            // (2n+a+b+2)(1-x^2) P_n' = (n+a+b+1)((2n+a+b+2)x + a - b) P_n
            //                          - 2(n+1)(n+a+b+1) P_{n+1}
            const Poly pp = polynomial(spec, n + 1);
            const Rational k2 = k + Rational(2);
            const Poly lhs_b = k2 * (one_minus_x2 * pn.derivative());
            const Poly rhs_b = (nn + s + Rational(1)) * (Poly({a - b, k2}) * pn) -
                               Rational(2) * (nn + Rational(1)) * (nn + s + Rational(1)) * pp;
            return {lhs_a - rhs_a, lhs_b - rhs_b};
        }
        case FamilyKind::Laguerre: {
            // x L_n' = n L_n - (n + a) L_{n-1}
            const Poly lhs = Poly::x() * pn.derivative();
            const Poly rhs = nn * pn - (nn + spec.alpha()) * pm;
            return {lhs - rhs};
        }
        case FamilyKind::Hermite:
            return {pn.derivative() - Rational(2) * nn * pm};
        case FamilyKind::Gegenbauer:
        case FamilyKind::ChebyshevT:
        case FamilyKind::ChebyshevU:
            throw NotApplicable("derivative identities are checked through the Jacobi family");
    }
    throw InvalidParameter("unknown family");
}

}  // namespace qop

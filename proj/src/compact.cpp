#include "qop/compact.hpp"

#include <algorithm>

#include "qop/errors.hpp"
#include "qop/resultant.hpp"

namespace qop {

namespace {

using R = Rational;

R signed_unit(long exponent) { return R(sign_power(exponent)); }

long tri(long n) { return n * (n - 1) / 2; }     // n(n-1)/2
long tri_up(long n) { return n * (n + 1) / 2; }  // n(n+1)/2

void require_n(int n, int min, const char* what) {
    if (n < min) throw InvalidParameter(std::string(what) + " needs n >= " + std::to_string(min));
}

/// Value of the t = 0 Schur product (-1)^(n(n-1)/2) prod a_k^(2n-2k) c_k^(k-1).
R res_t0_product(const GeneralRecurrence& rec, int n) {
    R out = signed_unit(tri(n));
    for (int k = 1; k <= n; ++k) {
        out *= pow(rec.at(k).a, 2L * n - 2L * k);
        if (k > 1) out *= pow(rec.at(k).c, k - 1);
    }
    return out;
}

/// True when some Jacobi member of degree k <= n has a vanishing leading
/// coefficient (k + alpha + beta + 1)_k, i.e. alpha + beta is an integer in
/// [-2n, -2]. The compact formulas assume exact degrees.
bool degree_deficient(const FamilySpec& spec, int n) {
    if (spec.kind() != FamilyKind::Jacobi) return false;
    const R sum = spec.alpha() + spec.beta();
    return sum.is_integer() && sum <= R(-2) && sum >= R(-2L * n);
}

// --- family resultants ----------------------------------------------------

R res_jacobi(const FamilySpec& spec, int n, const R& s, const R& t) {
    const R& a = spec.alpha();
    const R& b = spec.beta();
    const R sum = a + b;
    const R nn(n);
    const R k0 = R(2) * nn + sum;  // 2n + a + b
    if (t.is_zero()) {
        R out = signed_unit(tri(n)) * pow(k0, n - 1) / pow(R(2), static_cast<long>(n) * (n - 1));
        for (int k = 1; k <= n; ++k) out *= pow(R(k), k - 2L * n + 1);
        for (int k = 1; k <= n - 1; ++k) {
            out *= pow(R(k) + a, k) * pow(R(k) + b, k) * pow(nn + R(k) + sum, n - k - 1);
        }
        return out;
    }
    R pre = signed_unit(tri_up(n)) * pow(k0, n - 2) * pow(k0 - R(1), n) * pow(k0 - R(2), n) /
            (pow(R(2), static_cast<long>(n) * (n - 1)) * pow(nn + a - R(1), n) * pow(nn + b - R(1), n));
    for (int k = 1; k <= n; ++k) pre *= pow(R(k), k - 2L * n + 2);
    for (int k = 1; k <= n - 1; ++k) {
        pre *= pow(R(k) + a, k) * pow(R(k) + b, k) * pow(nn + R(k) + sum, n - k - 2);
    }
    const R arg = -(R(2) * (nn + a - R(1)) * (nn + b - R(1))) / ((k0 - R(1)) * (k0 - R(2)) * t) -
                  (a * a - b * b) / (k0 * (k0 - R(2))) -
                  R(2) * nn * (nn + sum) * s / (k0 * (k0 - R(1)));
    return pre * pow(t, n) * quasi(spec, n, s)(arg);
}

R res_laguerre(const FamilySpec& spec, int n, const R& s, const R& t) {
    const R& a = spec.alpha();
    const R nn(n);
    if (t.is_zero()) {
        R out = signed_unit(tri(n));
        for (int k = 1; k <= n; ++k) out *= pow(R(k), k - 2L * n + 1);
        for (int k = 1; k <= n - 1; ++k) out *= pow(R(k) + a, k);
        return out;
    }
    R pre = signed_unit(tri_up(n)) / pow(nn + a - R(1), n);
    for (int k = 1; k <= n; ++k) pre *= pow(R(k), k - 2L * n + 2);
    for (int k = 1; k <= n - 1; ++k) pre *= pow(R(k) + a, k);
    const R arg = (nn + a - R(1) + (R(2) * nn + a - R(1)) * t + nn * s * t) / t;
    return pre * pow(t, n) * quasi(spec, n, s)(arg);
}

R res_hermite(int n, const R& s, const R& t) {
    const FamilySpec h = FamilySpec::hermite();
    if (t.is_zero()) {
        R out = signed_unit(tri(n)) * pow(R(2), 3L * n * (n - 1) / 2);
        for (int k = 1; k <= n - 1; ++k) out *= pow(R(k), k);
        return out;
    }
    R pre = signed_unit(tri_up(n)) * pow(R(2), static_cast<long>(n) * (3 * n - 5) / 2) / pow(R(n - 1), n);
    for (int k = 1; k <= n - 1; ++k) pre *= pow(R(k), k);
    const R arg = -(R(2) * R(n - 1) + s * t) / (R(2) * t);
    return pre * pow(t, n) * quasi(h, n, s)(arg);
}

R res_chebyshev(const FamilySpec& spec, int n, const R& s, const R& t) {
    const bool first_kind = spec.kind() == FamilyKind::ChebyshevT;
    if (t.is_zero()) {
        const long e = first_kind ? static_cast<long>(n - 1) * (n - 2) : static_cast<long>(n) * (n - 1);
        return signed_unit(tri(n)) * pow(R(2), e);
    }
    const long e = first_kind ? static_cast<long>(n) * n - 3L * n + 3 : static_cast<long>(n) * (n - 1);
    const R arg = -(R(1) + s * t) / (R(2) * t);
    return signed_unit(tri_up(n)) * pow(R(2), e) * pow(t, n) * quasi(spec, n, s)(arg);
}

/// Gegenbauer has no dedicated corollary; the generic theorem is specialised
/// with a_k = 2(k+l-1)/k, b_k = 0, c_k = (k+2l-2)/k written out inline.
R res_gegenbauer(const FamilySpec& spec, int n, const R& s, const R& t) {
    const R& l = spec.lambda();
    auto a_k = [&](int k) { return R(2) * (R(k) + l - R(1)) / R(k); };
    auto c_k = [&](int k) { return (R(k) + R(2) * l - R(2)) / R(k); };
    if (t.is_zero()) {
        R out = signed_unit(tri(n));
        for (int k = 1; k <= n; ++k) {
            out *= pow(a_k(k), 2L * n - 2L * k);
            if (k > 1) out *= pow(c_k(k), k - 1);
        }
        return out;
    }
    R pre = signed_unit(tri_up(n)) * pow(a_k(n), n) / pow(c_k(n), n);
    for (int k = 1; k <= n; ++k) {
        pre *= pow(a_k(k), 2L * n - 2L * k - 1);
        if (k > 1) pre *= pow(c_k(k), k - 1);
    }
    const R arg = -(c_k(n) + s * t) / (a_k(n) * t);
    return pre * pow(t, n) * quasi(spec, n, s)(arg);
}

// --- family discriminants -------------------------------------------------

R disc_jacobi(const FamilySpec& spec, int n, const R& c) {
    const R& a = spec.alpha();
    const R& b = spec.beta();
    const R sum = a + b;
    const R nn(n);
    const R k0 = R(2) * nn + sum;
    R pre = pow(k0, 2L * n - 1) / pow(R(2), static_cast<long>(n) * (n - 1));
    for (int k = 1; k <= n; ++k) pre *= pow(R(k), k - 2L * n + 3);
    for (int k = 1; k <= n - 1; ++k) {
        pre *= pow(R(k) + a, k - 1) * pow(R(k) + b, k - 1) * pow(nn + R(k) + sum, n - k - 1);
    }
    const R xi = -(R(2) * nn * (nn + sum) * c * c + (a * a - b * b) * c + R(2) * (nn + a) * (nn + b)) /
                 (k0 * k0 * c);
    const R denom = (nn + a + c * nn) * (nn + b - c * nn);
    return pre * pow(-c, n) * quasi(spec, n, c)(xi) / denom;
}

R disc_gegenbauer(const FamilySpec& spec, int n, const R& c) {
    const R& l = spec.lambda();
    const R nn(n);
    const R k0 = R(2) * nn + R(2) * l - R(1);  // 2n + 2l - 1
    R pre = pow(R(2), static_cast<long>(n) * (n - 1)) * pow(k0, n);
    for (int k = 1; k <= n; ++k) pre *= pow(R(k), k - 2L * n + 3) * pow(R(k) + l - R(1), 2L * n - 2L * k);
    for (int k = 1; k <= n - 1; ++k) pre *= pow(R(k) + R(2) * l - R(1), k - 2);
    const R xi = -(nn * c * c + nn + R(2) * l - R(1)) / (k0 * c);
    const R m = nn + R(2) * l - R(1);
    return pre * pow(-c, n) * quasi(spec, n, c)(xi) / (m * m - (c * nn) * (c * nn));
}

R disc_chebyshev_t(const FamilySpec& spec, int n, const R& c) {
    const R nn(n);
    const R pre = pow(R(2), static_cast<long>(n - 1) * (n - 2)) * pow(R(2) * nn - R(1), n) * pow(-c, n) /
                  (R(1) - c * c);
    const R xi = -((nn - R(1)) * c * c + nn) / ((R(2) * nn - R(1)) * c);
    return pre * quasi(spec, n, c)(xi);
}

R disc_chebyshev_u(const FamilySpec& spec, int n, const R& c) {
    const R nn(n);
    const R pre = pow(R(2), static_cast<long>(n) * (n - 1)) * pow(R(2) * nn + R(1), n) * pow(-c, n) /
                  ((nn + R(1)) * (nn + R(1)) - (c * nn) * (c * nn));
    const R xi = -(nn * c * c + nn + R(1)) / ((R(2) * nn + R(1)) * c);
    return pre * quasi(spec, n, c)(xi);
}

R disc_laguerre(const FamilySpec& spec, int n, const R& c) {
    const R& a = spec.alpha();
    const R nn(n);
    R pre = R(1) / (nn + a + c * nn);
    for (int k = 1; k <= n; ++k) pre *= pow(R(k), k - 2L * n + 3);
    for (int k = 1; k <= n - 1; ++k) pre *= pow(R(k) + a, k - 1);
    const R xi = (nn * c * c + (R(2) * nn + a) * c + nn + a) / c;
    return pre * pow(-c, n) * quasi(spec, n, c)(xi);
}

R disc_hermite(int n, const R& c) {
    R pre = pow(R(2), static_cast<long>(n) * (3 * n - 5) / 2);
    for (int k = 1; k <= n - 1; ++k) pre *= pow(R(k), k);
    const R xi = -(c * c + R(2) * R(n)) / (R(2) * c);
    return pre * pow(-c, n) * quasi(FamilySpec::hermite(), n, c)(xi);
}

}  // namespace

GeneralRecurrence::GeneralRecurrence(std::vector<RecurrenceCoeffs> coeffs) : coeffs_(std::move(coeffs)) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].a.is_zero() || (i > 0 && coeffs_[i].c.is_zero())) {
            throw InvalidRecurrence("recurrence needs a_m c_m != 0 (m = " + std::to_string(i + 1) + ")");
        }
    }
}

GeneralRecurrence GeneralRecurrence::from_family(const FamilySpec& spec, int n) {
    std::vector<RecurrenceCoeffs> v;
    for (int m = 1; m <= n; ++m) v.push_back(recurrence_coeffs(spec, m));
    return GeneralRecurrence(std::move(v));
}

Poly GeneralRecurrence::quasi(int n, const Rational& c) const {
    if (n < 1 || n > size()) throw InvalidParameter("recurrence does not cover degree " + std::to_string(n));
    Poly prev = Poly::constant(1);
    Poly cur = Poly({at(1).b, at(1).a});
    for (int m = 2; m <= n; ++m) {
        Poly next = Poly({at(m).b, at(m).a}) * cur - at(m).c * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur + c * prev;
}

DerivativeRelation derivative_relation(const FamilySpec& spec, int n) {
    require_n(n, 1, "derivative_relation");
    const R nn(n);
    switch (spec.kind()) {
        case FamilyKind::Jacobi: {
            const R& a = spec.alpha();
            const R& b = spec.beta();
            const R sum = a + b;
            const R k0 = R(2) * nn + sum;
            return {Poly({1, 0, -1}),
                    -nn,
                    -nn * (b - a) / k0,
                    R(2) * (nn + a) * (nn + b) / k0,
                    nn + sum,
                    (nn + sum) * (a - b) / k0,
                    -R(2) * nn * (nn + sum) / k0};
        }
        case FamilyKind::Gegenbauer: {
            const R m = nn + R(2) * spec.lambda() - R(1);
            return {Poly({1, 0, -1}), -nn, 0, m, m, 0, -nn};
        }
        case FamilyKind::ChebyshevU:
            return {Poly({1, 0, -1}), -nn, 0, nn + R(1), nn + R(1), 0, -nn};
        case FamilyKind::ChebyshevT:
            return {Poly({1, 0, -1}), -nn, 0, nn, nn - R(1), 0, -(nn - R(1))};
        case FamilyKind::Laguerre: {
            const R na = nn + spec.alpha();
            return {Poly::x(), 0, nn, -na, 1, -na, nn};
        }
        case FamilyKind::Hermite:
            return {Poly::constant(1), 0, 0, R(2) * nn, 2, 0, -1};
    }
    throw InvalidParameter("unknown family");
}

Rational schur_product(const GeneralRecurrence& rec, int n) {
    require_n(n, 1, "schur_product");
    if (rec.size() < n) throw InvalidRecurrence("recurrence shorter than n");
    R out = signed_unit(tri(n));
    for (int k = 1; k <= n; ++k) {
        out *= pow(rec.at(k).a, static_cast<long>(n) - 2L * k + 1);
        if (k > 1) out *= pow(rec.at(k).c, k - 1);
    }
    return out;
}

Rational res_general(const GeneralRecurrence& rec, int n, const Rational& s, const Rational& t,
                     const Poly& phi_ns) {
    require_n(n, 2, "res_general");
    if (rec.size() < n) throw InvalidRecurrence("recurrence shorter than n");
    if (t.is_zero()) return res_t0_product(rec, n);
    const RecurrenceCoeffs& top = rec.at(n);
    R pre = signed_unit(tri_up(n)) * pow(top.a, n) / pow(top.c, n);
    for (int k = 1; k <= n; ++k) {
        pre *= pow(rec.at(k).a, 2L * n - 2L * k - 1);
        if (k > 1) pre *= pow(rec.at(k).c, k - 1);
    }
    const R arg = -(top.c + top.b * t + s * t) / (top.a * t);
    return pre * pow(t, n) * phi_ns(arg);
}

Rational res_family(const FamilySpec& spec, int n, const Rational& s, const Rational& t) {
    require_n(n, 2, "res_family");
    if (degree_deficient(spec, n)) return resultant(quasi(spec, n, s), quasi(spec, n - 1, t));
    try {
        switch (spec.kind()) {
            case FamilyKind::Jacobi: return res_jacobi(spec, n, s, t);
            case FamilyKind::Laguerre: return res_laguerre(spec, n, s, t);
            case FamilyKind::Hermite: return res_hermite(n, s, t);
            case FamilyKind::Gegenbauer: return res_gegenbauer(spec, n, s, t);
            case FamilyKind::ChebyshevT:
            case FamilyKind::ChebyshevU: return res_chebyshev(spec, n, s, t);
        }
    } catch (const PoleEncountered&) {
        // Degenerate parameters (a vanishing factor such as n + alpha - 1):
        // fall back to the Sylvester determinant.
    }
    return resultant(quasi(spec, n, s), quasi(spec, n - 1, t));
}

Rational disc_general(const DerivativeRelation& rel, const DiscContext& ctx, int n, const Rational& c,
                      const Poly& phi_nc) {
    require_n(n, 2, "disc_general");
    if (c.is_zero()) throw PoleEncountered("general discriminant formula is singular at c = 0");
    const R gap = rel.D - rel.A;
    if (gap.is_zero()) throw InvalidParameter("derivative relation needs D - A != 0");
    const R res_rho = resultant(phi_nc, rel.rho);
    if (res_rho.is_zero()) throw PoleEncountered("Res(Phi_{n;c}, rho) vanishes");
    const R xi = (rel.F * c * c + (rel.B - rel.E) * c - rel.C) / (gap * c);
    const R num = signed_unit(tri_up(n)) * pow(gap, n) * pow(c, n);
    const R den = pow(ctx.leading, 2L - rel.rho.degree()) * res_rho;
    return num / den * ctx.res_n_nm1 * phi_nc(xi);
}

bool disc_formula_has_pole(const FamilySpec& spec, int n, const Rational& c) {
    if (c.is_zero()) return true;
    const R nn(n);
    switch (spec.kind()) {
        case FamilyKind::Jacobi:
            return ((nn + spec.alpha() + c * nn) * (nn + spec.beta() - c * nn)).is_zero();
        case FamilyKind::Laguerre: return (nn + spec.alpha() + c * nn).is_zero();
        case FamilyKind::Hermite: return false;
        case FamilyKind::Gegenbauer: {
            const R m = nn + R(2) * spec.lambda() - R(1);
            return (m * m - (c * nn) * (c * nn)).is_zero();
        }
        case FamilyKind::ChebyshevT: return (R(1) - c * c).is_zero();
        case FamilyKind::ChebyshevU: return ((nn + R(1)) * (nn + R(1)) - (c * nn) * (c * nn)).is_zero();
    }
    return true;
}

std::vector<Rational> disc_formula_poles(const FamilySpec& spec, int n) {
    require_n(n, 1, "disc_formula_poles");
    const R nn(n);
    std::vector<R> out;
    switch (spec.kind()) {
        case FamilyKind::Jacobi:
            out = {-(nn + spec.alpha()) / nn, (nn + spec.beta()) / nn};
            break;
        case FamilyKind::Laguerre: out = {-(nn + spec.alpha()) / nn}; break;
        case FamilyKind::Hermite: break;
        case FamilyKind::Gegenbauer: {
            const R m = (nn + R(2) * spec.lambda() - R(1)) / nn;
            out = {-m, m};
            break;
        }
        case FamilyKind::ChebyshevT: out = {-1, 1}; break;
        case FamilyKind::ChebyshevU: out = {-(nn + R(1)) / nn, (nn + R(1)) / nn}; break;
    }
    std::erase_if(out, [](const R& c) { return c.is_zero(); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rational disc_family(const FamilySpec& spec, int n, const Rational& c) {
    require_n(n, 1, "disc_family");
    if (n == 1) return R(1);
    if (degree_deficient(spec, n)) return discriminant(quasi(spec, n, c));
    if (c.is_zero()) {
        switch (spec.kind()) {
            case FamilyKind::Jacobi:
            case FamilyKind::Laguerre:
            case FamilyKind::Hermite: return stieltjes_hilbert_limit(spec, n);
            default: return discriminant(polynomial(spec, n));
        }
    }
    if (disc_formula_has_pole(spec, n, c)) return discriminant(quasi(spec, n, c));
    try {
        switch (spec.kind()) {
            case FamilyKind::Jacobi: return disc_jacobi(spec, n, c);
            case FamilyKind::Laguerre: return disc_laguerre(spec, n, c);
            case FamilyKind::Hermite: return disc_hermite(n, c);
            case FamilyKind::Gegenbauer: return disc_gegenbauer(spec, n, c);
            case FamilyKind::ChebyshevT: return disc_chebyshev_t(spec, n, c);
            case FamilyKind::ChebyshevU: return disc_chebyshev_u(spec, n, c);
        }
    } catch (const PoleEncountered&) {
        // A parameter-dependent factor of the prefactor vanished.
    }
    return discriminant(quasi(spec, n, c));
}

Poly disc_as_poly_in_c(const FamilySpec& spec, int n) {
    require_n(n, 2, "disc_as_poly_in_c");
    std::vector<R> xs;
    std::vector<R> ys;
    for (long k = 2; static_cast<int>(xs.size()) < 2 * n - 1; ++k) {
        const R c(k);
        if (disc_formula_has_pole(spec, n, c)) continue;
        xs.push_back(c);
        ys.push_back(disc_family(spec, n, c));
    }
    return interpolate(xs, ys);
}

Rational stieltjes_hilbert_limit(const FamilySpec& spec, int n) {
    require_n(n, 1, "stieltjes_hilbert_limit");
    switch (spec.kind()) {
        case FamilyKind::Jacobi: {
            const R& a = spec.alpha();
            const R& b = spec.beta();
            R out = pow(R(2), -static_cast<long>(n) * (n - 1));
            for (int k = 1; k <= n; ++k) {
                out *= pow(R(k), k - 2L * n + 2) * pow(R(k) + a, k - 1) * pow(R(k) + b, k - 1) *
                       pow(R(n + k) + a + b, n - k);
            }
            return out;
        }
        case FamilyKind::Laguerre: {
            R out(1);
            for (int k = 1; k <= n; ++k) out *= pow(R(k), k - 2L * n + 2) * pow(R(k) + spec.alpha(), k - 1);
            return out;
        }
        case FamilyKind::Hermite: {
            R out = pow(R(2), 3L * n * (n - 1) / 2);
            for (int k = 1; k <= n; ++k) out *= pow(R(k), k);
            return out;
        }
        default: throw NotApplicable("no Stieltjes/Hilbert closed form for " + spec.describe());
    }
}

}  // namespace qop

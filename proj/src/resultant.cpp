#include "qop/resultant.hpp"

#include <utility>

#include "qop/errors.hpp"

namespace qop {

namespace {

/// Coefficients of a degree-`n` form, highest degree first.
std::vector<Rational> descending(const Poly& f, int n) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = n; k >= 0; --k) out.push_back(f.coeff(k));
    return out;
}

Matrix<Rational> sylvester_of_forms(const std::vector<Rational>& fd, const std::vector<Rational>& gd) {
    const std::size_t n = fd.size() - 1;
    const std::size_t m = gd.size() - 1;
    const std::size_t size = n + m;
    Matrix<Rational> s(size, std::vector<Rational>(size));
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t j = 0; j <= n; ++j) s[row][row + j] = fd[j];
    }
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t j = 0; j <= m; ++j) s[m + row][row + j] = gd[j];
    }
    return s;
}

}  // namespace

Matrix<Rational> sylvester_matrix(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("Sylvester matrix of the zero polynomial");
    return sylvester_of_forms(descending(f, f.degree()), descending(g, g.degree()));
}

Rational resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant with the zero polynomial");
    return determinant(sylvester_matrix(f, g));
}

Rational resultant_oracle(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant with the zero polynomial");
    const int n = f.degree();
    const int m = g.degree();
    if (n == 0) return pow(f.leading(), m);
    if (m == 0) return pow(g.leading(), n);
    if (n < m) return Rational(sign_power(static_cast<long>(n) * m)) * resultant_oracle(g, f);
    // Res(f, g) = (-1)^{nm} Res(g, f) = (-1)^{nm} lc(g)^{n - deg r} Res(g, r)
    Poly r = f.divmod(g).second;
    if (r.is_zero()) return Rational(0);
    return Rational(sign_power(static_cast<long>(n) * m)) * pow(g.leading(), n - r.degree()) *
           resultant_oracle(g, r);
}

Rational discriminant(const Poly& f) {
    const int n = f.degree();
    if (n < 1) throw DegreeTooLow("discriminant needs degree >= 1");
    const long half = static_cast<long>(n) * (n - 1) / 2;
    return Rational(sign_power(half)) * resultant(f, f.derivative()) / f.leading();
}

Rational discriminant_padded(const Poly& f, int n) {
    if (n < 1) throw DegreeTooLow("padded discriminant needs form degree >= 1");
    if (f.degree() > n) throw InvalidParameter("polynomial degree exceeds the form degree");
    if (n == 1) return Rational(1);
    const auto fd = descending(f, n);
    std::vector<Rational> dd;  // derivative as a degree-(n-1) form
    for (int k = n; k >= 1; --k) dd.push_back(f.coeff(k) * Rational(k));
    Matrix<Rational> s = sylvester_of_forms(fd, dd);
    // The leading column holds a0 (row 0) and n*a0 (first derivative row);
    // clearing the latter leaves det = a0 * minor(0, 0).
    const std::size_t first_deriv_row = static_cast<std::size_t>(n) - 1;
    for (std::size_t j = 0; j < s.size(); ++j) {
        s[first_deriv_row][j] -= Rational(n) * s[0][j];
    }
    Matrix<Rational> minor;
    for (std::size_t i = 1; i < s.size(); ++i) minor.emplace_back(s[i].begin() + 1, s[i].end());
    const long half = static_cast<long>(n) * (n - 1) / 2;
    return Rational(sign_power(half)) * determinant(minor);
}

}  // namespace qop

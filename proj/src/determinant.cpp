#include "qop/determinant.hpp"

#include <utility>

#include "qop/errors.hpp"

namespace qop {

BigInt bareiss_determinant(Matrix<BigInt> m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw InvalidParameter("determinant of a non-square matrix");
    }
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : BigInt(-m[n - 1][n - 1]);
}

Rational determinant(const Matrix<Rational>& m) {
    Matrix<BigInt> scaled;
    scaled.reserve(m.size());
    BigInt scale = 1;
    for (const auto& row : m) {
        BigInt den = 1;
        for (const auto& v : row) den = lcm(den, v.denominator());
        std::vector<BigInt> irow;
        irow.reserve(row.size());
        for (const auto& v : row) irow.push_back(v.numerator() * (den / v.denominator()));
        scaled.push_back(std::move(irow));
        scale *= den;
    }
    return Rational(bareiss_determinant(std::move(scaled)), scale);
}

}  // namespace qop

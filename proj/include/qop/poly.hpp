#pragma once

#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qop/rational.hpp"

namespace qop {

/// Dense univariate polynomial over Q. coeffs()[k] is the coefficient of x^k;
/// the highest stored coefficient is nonzero, and the zero polynomial stores
/// nothing.
class Poly {
public:
    /// Degree reported for the zero polynomial.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

    static Poly constant(const Rational& c) { return Poly({c}); }
    static Poly x() { return Poly({0, 1}); }
    /// c * x^k
    static Poly monomial(const Rational& c, int k);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return is_zero() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of x^k; zero outside the stored range.
    Rational coeff(int k) const;
    /// Leading coefficient; zero for the zero polynomial.
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    Rational operator()(const Rational& x) const { return evaluate(x); }
    Rational evaluate(const Rational& x) const;

    Poly derivative() const;
    /// x -> f(a x + b)
    Poly affine_substitute(const Rational& a, const Rational& b) const;
    /// Coefficients scaled so that the result has integer coefficients with
    /// content 1 and the same sign of leading coefficient; zero stays zero.
    std::vector<BigInt> primitive_integer_coeffs() const;

    /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return a * Rational(-1); }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    std::string to_string(char var = 'x') const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Interpolating polynomial of minimal degree through (xs[i], ys[i]).
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace qop

#include "qop/poly.hpp"

#include <algorithm>
#include <sstream>

#include "qop/errors.hpp"

namespace qop {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::monomial(const Rational& c, int k) {
    if (k < 0) throw InvalidParameter("negative monomial exponent");
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational Poly::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    }
    return Poly(std::move(d));
}

Poly Poly::affine_substitute(const Rational& a, const Rational& b) const {
    const Poly inner({b, a});
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner + Poly::constant(*it);
    }
    return acc;
}

std::vector<BigInt> Poly::primitive_integer_coeffs() const {
    if (is_zero()) return {};
    BigInt den = 1;
    for (const auto& c : coeffs_) den = lcm(den, c.denominator());
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        BigInt v = c.numerator() * (den / c.denominator());
        g = gcd(g, v);
        out.push_back(std::move(v));
    }
    for (auto& v : out) v /= g;
    return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw ZeroPolynomial("polynomial division by zero");
    std::vector<Rational> rem = coeffs_;
    const int dd = divisor.degree();
    const Rational lead = divisor.leading();
    if (degree() < dd) return {Poly(), *this};
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1);
    for (int k = degree(); k >= dd; --k) {
        const Rational q = rem[static_cast<std::size_t>(k)] / lead;
        quot[static_cast<std::size_t>(k - dd)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(k - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

std::string Poly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        if (k == 0 || mag != Rational(1)) os << mag;
        if (k >= 1) os << (k == 0 || mag != Rational(1) ? "*" : "") << var;
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) throw InvalidParameter("interpolation sizes differ");
    // Newton divided differences.
    const std::size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            const Rational denom = xs[i] - xs[i - level];
            if (denom.is_zero()) throw InvalidParameter("interpolation nodes must be distinct");
            dd[i] = (dd[i] - dd[i - 1]) / denom;
        }
    }
    Poly acc;
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * Poly({-xs[i], 1}) + Poly::constant(dd[i]);
    }
    return acc;
}

}  // namespace qop

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qop {

using BigInt = mpz_class;

/// Arbitrary-precision fraction kept in lowest terms with a positive
/// denominator; zero is 0/1. Backed by GMP's mpq_t.
class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long long v) : q_(BigInt(std::to_string(v))) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p/q" or "p"; throws InvalidParameter on malformed input or q = 0.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// "p/q", or "p" when q = 1.
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.q_ = -a.q_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational abs() const;
    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Integer power with negative exponents allowed; 0^0 = 1.
Rational pow(const Rational& base, long exponent);
BigInt pow(const BigInt& base, unsigned long exponent);

/// (-1)^k.
inline int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace qop

template <>
struct std::hash<qop::Rational> {
    std::size_t operator()(const qop::Rational& r) const {
        return std::hash<std::string>{}(r.to_string());
    }
};

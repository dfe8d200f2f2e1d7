#include "qop/rational.hpp"

#include <ostream>

#include "qop/errors.hpp"

namespace qop {

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
    if (text.empty()) return false;
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) return false;
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9') return false;
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidParameter("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    BigInt num;
    BigInt den = 1;
    const bool ok = slash == std::string_view::npos
                        ? parse_integer(text, num)
                        : parse_integer(text.substr(0, slash), num) &&
                              parse_integer(text.substr(slash + 1), den);
    if (!ok) throw InvalidParameter("malformed rational '" + std::string(text) + "', expected p/q");
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw PoleEncountered("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent == 0) return Rational(1);
    const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                         : static_cast<unsigned long>(exponent);
    Rational r(pow(base.numerator(), e), pow(base.denominator(), e));
    return exponent < 0 ? Rational(1) / r : r;
}

}  // namespace qop

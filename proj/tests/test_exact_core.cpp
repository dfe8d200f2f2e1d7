#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "qop/determinant.hpp"
#include "qop/errors.hpp"
#include "qop/resultant.hpp"
#include "support.hpp"

using namespace qop;
using qop::testing::random_poly;

namespace {
const Poly kH2({-2, 0, 4});
const Poly kH3({0, -12, 0, 8});
}  // namespace

TEST_CASE("rational values are canonical") {
    const Rational r(BigInt(6), BigInt(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational(6, 3).is_integer());
    CHECK((Rational(1, 6) + Rational(1, 3)) == Rational(1, 2));
    CHECK(Rational(3, 8).to_string() == "3/8");
    CHECK(Rational(-5).to_string() == "-5");
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational parsing and errors") {
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS_AS(Rational::parse("1/0"), InvalidParameter);
    CHECK_THROWS_AS(Rational::parse("abc"), InvalidParameter);
    CHECK_THROWS_AS(Rational::parse("1/"), InvalidParameter);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), InvalidParameter);
    CHECK_THROWS_AS(Rational(1) / Rational(0), PoleEncountered);
}

TEST_CASE("rational powers") {
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow(Rational(0), 0) == Rational(1));
    CHECK_THROWS_AS(pow(Rational(0), -1), PoleEncountered);
}

TEST_CASE("poly canonical form and arithmetic") {
    CHECK(Poly({1, 2, 0, 0}).degree() == 1);
    CHECK(Poly({0, 0}).is_zero());
    CHECK(Poly().degree() == Poly::kZeroDegree);
    const Poly f({1, 1});
    CHECK(f * f == Poly({1, 2, 1}));
    CHECK((f - f).is_zero());
    CHECK(kH3.derivative() == Poly({-12, 0, 24}));
    CHECK(kH2(Rational(1, 2)) == Rational(-1));
    CHECK(kH2.to_string() == "4*x^2 - 2");
    const auto [q, r] = Poly({-1, 0, 1}).divmod(Poly({1, 1}));
    CHECK(q == Poly({-1, 1}));
    CHECK(r.is_zero());
    CHECK_THROWS_AS(f.divmod(Poly()), ZeroPolynomial);
}

TEST_CASE("affine substitution examples") {
    CHECK(affine_substitute(Poly({0, 0, 1}), 2, 1) == Poly({1, 4, 4}));
    CHECK(affine_substitute(kH2, 1, 0) == kH2);
    CHECK(affine_substitute(kH2, 0, 1) == Poly({2}));
}

TEST_CASE("interpolation recovers a polynomial") {
    const Poly f({3, Rational(-1, 2), 0, 7});
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (int k = -2; k <= 1; ++k) {
        xs.emplace_back(k);
        ys.push_back(f(Rational(k)));
    }
    CHECK(interpolate(xs, ys) == f);
}

TEST_CASE("bareiss determinant") {
    CHECK(bareiss_determinant({}) == 1);
    CHECK(bareiss_determinant({{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}) == -1);
    CHECK(bareiss_determinant({{BigInt(2), BigInt(0), BigInt(1)},
                               {BigInt(1), BigInt(3), BigInt(2)},
                               {BigInt(1), BigInt(1), BigInt(2)}}) == 6);
    CHECK(bareiss_determinant({{BigInt(2), BigInt(0), BigInt(1)},
                               {BigInt(1), BigInt(3), BigInt(2)},
                               {BigInt(1), BigInt(1), BigInt(1)}}) == 0);
    CHECK(determinant({{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}}) == Rational(1, 60));
}

TEST_CASE("resultant examples") {
    CHECK(resultant(Poly::x(), Poly({-1, 1})) == Rational(-1));
    CHECK(resultant(Poly({1, 3, 2}), Poly({1, 1})) == Rational(0));
    CHECK(resultant(Poly({3}), Poly({5})) == Rational(1));
    CHECK(resultant(Poly({1, 1, 1}), Poly({3})) == Rational(9));
    // lc(H_3)^2 H_2(0) H_2(sqrt(3/2)) H_2(-sqrt(3/2)) = 64 * (-2) * 4 * 4.
    CHECK(resultant(kH3, kH2) == Rational(-2048));
    CHECK(resultant_oracle(kH3, kH2) == Rational(-2048));
    CHECK(resultant_oracle(Poly::x(), Poly({-1, 1})) == Rational(-1));
    CHECK(resultant_oracle(Poly({1, 1}), Poly({1, 1})) == Rational(0));
    CHECK_THROWS_AS(resultant(Poly(), Poly::x()), ZeroPolynomial);
    CHECK_THROWS_AS(resultant_oracle(Poly::x(), Poly()), ZeroPolynomial);
}

TEST_CASE("discriminant examples") {
    CHECK(discriminant(Poly({1, 3, 1})) == Rational(5));
    CHECK(discriminant(kH2) == Rational(32));
    CHECK(discriminant(Poly({1, -2, 1})) == Rational(0));
    CHECK(discriminant(Poly({5, 2})) == Rational(1));
    CHECK_THROWS_AS(discriminant(Poly({4})), DegreeTooLow);
}

TEST_CASE("padded discriminant examples") {
    CHECK(discriminant_padded(kH2, 2) == Rational(32));
    CHECK(discriminant_padded(kH2, 3) == Rational(512));
    CHECK(discriminant_padded(Poly::x(), 2) == Rational(1));
    CHECK(discriminant_padded(Poly::x(), 1) == Rational(1));
    CHECK_THROWS_AS(discriminant_padded(kH2, 0), DegreeTooLow);
    CHECK_THROWS_AS(discriminant_padded(kH3, 2), InvalidParameter);
}

TEST_CASE("property: resultant antisymmetry, multiplicativity and oracle agreement") {
    RationalSampler sampler(20240601);
    for (int trial = 0; trial < 60; ++trial) {
        const Poly f = random_poly(sampler, static_cast<int>(sampler.integer(0, 6)));
        const Poly g = random_poly(sampler, static_cast<int>(sampler.integer(0, 6)));
        const Poly h = random_poly(sampler, static_cast<int>(sampler.integer(0, 3)));
        const Rational fg = resultant(f, g);
        CHECK(fg == Rational(sign_power(static_cast<long>(f.degree()) * g.degree())) * resultant(g, f));
        CHECK(resultant(f, g * h) == fg * resultant(f, h));
        CHECK(fg == resultant_oracle(f, g));
    }
}

TEST_CASE("property: discriminant homogeneity and substitution") {
    RationalSampler sampler(77);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(sampler.integer(1, 6));
        const Poly f = random_poly(sampler, n);
        const Rational a = sampler.next_nonzero();
        const Rational b = sampler.next();
        const Rational c = sampler.next_nonzero();
        const Rational d = discriminant(f);
        CHECK(discriminant(c * f) == pow(c, 2L * (n - 1)) * d);
        CHECK(discriminant(affine_substitute(f, a, b)) == pow(a, static_cast<long>(n) * (n - 1)) * d);
    }
}

TEST_CASE("property: padded discriminant degree step") {
    RationalSampler sampler(4242);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(sampler.integer(1, 6));
        const Poly f = random_poly(sampler, n);
        const Rational a0 = f.leading();
        CHECK(discriminant_padded(f, n) == discriminant(f));
        CHECK(discriminant_padded(f, n + 1) == a0 * a0 * discriminant_padded(f, n));
        // Two formal roots at infinity form a repeated root.
        CHECK(discriminant_padded(f, n + 2).is_zero());
    }
}

TEST_CASE("property: repeated roots zero the discriminant") {
    RationalSampler sampler(9);
    for (int trial = 0; trial < 30; ++trial) {
        const Rational root = sampler.next();
        const Poly linear({-root, 1});
        const Poly g = random_poly(sampler, static_cast<int>(sampler.integer(0, 4)));
        CHECK(discriminant(linear * linear * g) == Rational(0));
        CHECK(resultant_oracle(linear * g, linear) == Rational(0));
    }
}

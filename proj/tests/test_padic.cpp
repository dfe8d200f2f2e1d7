#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qop/compact.hpp"
#include "qop/errors.hpp"
#include "qop/padic.hpp"
#include "qop/random.hpp"

using namespace qop;

namespace {

long mod(const BigInt& x, long p) {
    BigInt r = x % p;
    if (r < 0) r += p;
    return r.get_si();
}

long inverse_mod(long a, long p) {
    for (long b = 1; b < p; ++b) {
        if ((a * b) % p == 1) return b;
    }
    return 0;
}

bool residue_is_square(long u, long p) {
    for (long y = 1; y < p; ++y) {
        if ((y * y) % p == u) return true;
    }
    return false;
}

Rational hilbert_value(int r) {
    Rational out = pow(Rational(2), 3L * r * (r + 1) / 2);
    for (int k = 1; k <= r + 1; ++k) out *= pow(Rational(k), k);
    return out;
}

}  // namespace

TEST_CASE("valuation examples") {
    CHECK(v_p(Rational(12), 2) == Valuation(2));
    CHECK(v_p(Rational(0), 5).is_infinite());
    CHECK(v_p(Rational(3, 8), 2) == Valuation(-3));
    CHECK(v_p(BigInt(250), 5) == Valuation(3));
    CHECK_THROWS_AS(v_p(Rational(3), 4), NotPrime);
    CHECK(Valuation(7) < Valuation::infinity());
    CHECK((Valuation(2) + Valuation::infinity()).is_infinite());
    CHECK(Valuation::infinity().to_string() == "inf");
    CHECK_THROWS_AS(Valuation::infinity().value(), InvalidParameter);
}

TEST_CASE("primes") {
    CHECK(primes_up_to(37) == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37});
    CHECK(primes_up_to(1).empty());
    CHECK(is_prime(9973));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("square test examples") {
    CHECK(is_square_Q2(Rational(17)));
    CHECK_FALSE(is_square_Q2(Rational(2)));
    CHECK_FALSE(is_square_Q2(Rational(3, 4)));
    CHECK(is_square_Q2(Rational(0)));
    CHECK(is_square_Q2(Rational(1, 36)));
    CHECK(is_square_Qp(Rational(2), 7));
    CHECK_FALSE(is_square_Qp(Rational(3), 5));
    CHECK(is_square_Qp(Rational(25), 3));
    CHECK_FALSE(is_square_Qp(Rational(5), 5));
    CHECK_THROWS_AS(is_square_Qp(Rational(2), 2), EvenPrime);
    CHECK_THROWS_AS(is_square_Qp(Rational(2), 9), NotPrime);
    CHECK(is_square_in_Qp(Rational(-7), 2));
    CHECK(legendre_symbol(BigInt(2), 7) == 1);
    CHECK(legendre_symbol(BigInt(0), 5) == 0);
    CHECK(legendre_symbol(BigInt(3), 5) == -1);
    CHECK(legendre_symbol(BigInt(-1), 13) == 1);
    CHECK_THROWS_AS(legendre_symbol(BigInt(3), 15), NotPrime);
}

TEST_CASE("property: valuations are multiplicative and ultrametric") {
    for (std::int64_t p : {2, 3, 5, 7}) {
        RationalSampler sampler(1000 + static_cast<std::uint64_t>(p), 60);
        for (int i = 0; i < 200; ++i) {
            const Rational x = sampler.next();
            const Rational y = sampler.next();
            CHECK(v_p(x * y, p) == v_p(x, p) + v_p(y, p));
            CHECK(v_p(x + y, p) >= std::min(v_p(x, p), v_p(y, p)));
        }
    }
}

TEST_CASE("property: squares and twice squares in Q_2") {
    RationalSampler sampler(31337, 50);
    for (int i = 0; i < 100; ++i) {
        const Rational x = sampler.next_nonzero();
        CHECK(is_square_Q2(x * x));
        CHECK_FALSE(is_square_Q2(Rational(2) * x * x));
    }
}

TEST_CASE("property: Q_p square test agrees with residue enumeration") {
    RationalSampler sampler(8080, 40);
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        for (long v = -4; v <= 4; ++v) {
            for (int i = 0; i < 25; ++i) {
                BigInt a = sampler.integer(1, 400);
                BigInt b = sampler.integer(1, 400);
                if (a % p == 0 || b % p == 0) continue;
                if (sampler.integer(0, 1) == 1) a = -a;
                const Rational unit(a, b);
                const Rational x = unit * pow(Rational(p), v);
                const long u = (mod(a, p) * inverse_mod(mod(b, p), p)) % p;
                const bool expected = v % 2 == 0 && residue_is_square(u, p);
                CHECK_MESSAGE(is_square_Qp(x, p) == expected, x.to_string(), " p=", p);
                CHECK(legendre_symbol(a * b, p) == (residue_is_square(u, p) ? 1 : -1));
            }
        }
    }
    for (long v = -4; v <= 4; ++v) {
        for (long a = -31; a <= 31; a += 2) {
            for (long b = 1; b <= 15; b += 2) {
                const Rational x = Rational(a, b) * pow(Rational(2), v);
                const long u = mod(BigInt(a * b), 8);
                CHECK(is_square_Q2(x) == (v % 2 == 0 && u == 1));
            }
        }
    }
}

TEST_CASE("curve_poly examples") {
    const Poly f1 = curve_poly(1);
    CHECK(f1.degree() == 2);
    CHECK(f1.coeff(0) == Rational(32));
    CHECK(f1.leading() == Rational(4));
    const Poly f2 = curve_poly(2);
    CHECK(f2.degree() == 4);
    CHECK(f2.coeff(1).is_zero());
    CHECK(f2.coeff(3).is_zero());
    for (int r = 1; r <= 7; ++r) {
        const Poly f = curve_poly(r);
        CHECK(f.coeff(0) == hilbert_value(r));
        for (const Rational& c : f.coeffs()) CHECK(c.is_integer());
    }
    CHECK_THROWS_AS(curve_poly(0), InvalidParameter);
}

TEST_CASE("local solvability examples") {
    CHECK(is_locally_solvable(curve_poly(2), 2).verdict == Verdict::Unsolvable);
    for (std::int64_t p : {2, 3, 5, 7}) CHECK(is_locally_solvable(curve_poly(1), p).verdict == Verdict::Solvable);
    CHECK(is_locally_solvable(curve_poly(7), 7).verdict == Verdict::Unsolvable);
    CHECK(is_locally_solvable(curve_poly(7), 2).verdict == Verdict::Solvable);
    CHECK_THROWS_AS(is_locally_solvable(Poly({1, 0, 1, 1}), 3), MalformedCurve);
    CHECK_THROWS_AS(is_locally_solvable(curve_poly(1), 6), NotPrime);
    CHECK_THROWS_AS(is_locally_solvable(curve_poly(1), 3, 0), InvalidParameter);

    const LocalSolvability infinity = is_locally_solvable(Poly({3, 0, 1}), 5);
    REQUIRE(infinity.witness.has_value());
    CHECK(infinity.witness->chart == Chart::Infinity);

    // y^2 = 2x^2 + 3 has no Q_3 point: 2 is not a square mod 3, and 3 | x forces v_3(y^2) = 1.
    CHECK(is_locally_solvable(Poly({3, 0, 2}), 3).verdict == Verdict::Unsolvable);
    CHECK(is_locally_solvable(Poly({3, 0, 2}), 3, 1).verdict != Verdict::Solvable);
}

TEST_CASE("primes_with_no_points examples") {
    CHECK(primes_with_no_points(5, 37) == std::vector<std::int64_t>{2, 3, 5});
    CHECK(primes_with_no_points(13, 37) == std::vector<std::int64_t>{2, 5, 7, 11, 13});
    CHECK(primes_with_no_points(1, 37).empty());
}

TEST_CASE("disc_square_test_Q2 examples") {
    CHECK_FALSE(disc_square_test_Q2(4, Rational(1)));
    CHECK_FALSE(disc_square_test_Q2(12, Rational(3, 2)));
    CHECK(disc_square_test_Q2(9, Rational(1, 2)));
    CHECK(disc_square_test_Q2(9, Rational(3, 8)));
    CHECK_THROWS_AS(disc_square_test_Q2(1, Rational(1)), InvalidParameter);
}

TEST_CASE("property: sweep over the 40-point grid finds no squares") {
    const std::vector<Rational> grid = q2_sweep_grid();
    CHECK(grid.size() == 40);
    for (int n : {3, 4, 5, 6, 7, 11, 12, 13, 14, 15}) {
        for (const Rational& c : grid) CHECK_MESSAGE(!disc_square_test_Q2(n, c), "n=", n, " c=", c.to_string());
    }
}

TEST_CASE("property: r = 1 mod 8 curves have Q_2 points exactly when v_2(c) <= 0") {
    RationalSampler sampler(1717, 25);
    for (int r : {9, 17}) {
        const Poly f = curve_poly(r);
        for (int i = 0; i < 12; ++i) {
            Rational unit = sampler.next_nonzero();
            while (v_p(unit, 2) != Valuation(0)) unit = sampler.next_nonzero();
            for (long e = -3; e <= 3; ++e) {
                const Rational c = unit * pow(Rational(2), e);
                CHECK(is_square_Q2(f(c)) == (e <= 0));
            }
        }
    }
}

TEST_CASE("property: solvable witnesses re-verify") {
    for (int r = 1; r <= 6; ++r) {
        const Poly f = curve_poly(r);
        for (std::int64_t p : primes_up_to(23)) {
            const LocalSolvability result = is_locally_solvable(f, p);
            REQUIRE(result.verdict != Verdict::Inconclusive);
            CHECK(result.witness.has_value() == (result.verdict == Verdict::Solvable));
            if (!result.witness) continue;
            CHECK(verify_witness(f, p, *result.witness));
            if (const auto x = result.witness->x()) CHECK(is_square_in_Qp(f(*x), p));
        }
    }
    const Witness bogus{Chart::Affine, BigInt(0), 1};
    CHECK_FALSE(verify_witness(curve_poly(2), 2, bogus));
}

TEST_CASE("property: increasing max_depth never flips a decided verdict") {
    for (int r = 1; r <= 5; ++r) {
        const Poly f = curve_poly(r);
        for (std::int64_t p : {2, 3, 5, 7}) {
            const Verdict reference = is_locally_solvable(f, p).verdict;
            REQUIRE(reference != Verdict::Inconclusive);
            for (int depth = 1; depth <= default_max_depth(f, p) + 3; ++depth) {
                const Verdict v = is_locally_solvable(f, p, depth).verdict;
                CHECK((v == Verdict::Inconclusive || v == reference));
            }
        }
    }
}

TEST_CASE("default depth") {
    const Poly f = Poly({-2, 0, 1});
    CHECK(default_max_depth(f, 2) == 3 + 4);
    CHECK(default_max_depth(f, 3) == 4);
}

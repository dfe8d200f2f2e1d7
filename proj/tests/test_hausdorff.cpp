#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "qop/errors.hpp"
#include "qop/families.hpp"
#include "qop/hausdorff.hpp"
#include "qop/random.hpp"

using namespace qop;

namespace {

bool is_rational_square(const Rational& x) {
    if (x.sign() < 0) return false;
    return mpz_perfect_square_p(x.numerator().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(x.denominator().get_mpz_t()) != 0;
}

}  // namespace

TEST_CASE("gaussian moments") {
    CHECK(gaussian_moment(0) == Rational(1));
    CHECK(gaussian_moment(1) == Rational(0));
    CHECK(gaussian_moment(4) == Rational(3, 4));
    CHECK(gaussian_moment(6) == Rational(15, 8));
    CHECK_THROWS_AS(gaussian_moment(-1), InvalidParameter);
    CHECK(gaussian_integral(Poly({1, 5, 2})) == Rational(2));
}

TEST_CASE("property: moment recursion against the closed form") {
    Rational factorial(1);
    for (int k = 1; k <= 20; ++k) {
        CHECK(gaussian_moment(2 * k) == gaussian_moment(2 * k - 2) * Rational(2 * k - 1, 2));
        CHECK(gaussian_moment(2 * k - 1).is_zero());
        factorial *= Rational(k);
        Rational double_factorial(1);
        for (int i = k + 1; i <= 2 * k; ++i) double_factorial *= Rational(i);
        CHECK(gaussian_moment(2 * k) == double_factorial * factorial / (pow(Rational(2), 2 * k) * factorial));
    }
}

TEST_CASE("verify_hausdorff examples") {
    const QuadratureRule two{{Rational(1, 2), Rational(-1)}, {Rational(2, 3), Rational(1, 3)}, 2};
    CHECK(verify_hausdorff(two, 2));
    CHECK_FALSE(verify_hausdorff(two, 3));
    const QuadratureRule one{{Rational(0)}, {Rational(1)}, 1};
    CHECK(verify_hausdorff(one, 1));
    CHECK_FALSE(verify_hausdorff(one, 2));
    CHECK_THROWS_AS(verify_hausdorff(one, -1), InvalidParameter);
}

TEST_CASE("stroud bound examples") {
    CHECK(stroud_admissible(HausdorffInstance(2, 3)));
    CHECK_FALSE(stroud_admissible(HausdorffInstance(2, 4)));
    CHECK(stroud_admissible(HausdorffInstance(1, 0)));
    CHECK_THROWS_AS(HausdorffInstance(0, 1), InvalidParameter);
    CHECK_THROWS_AS(HausdorffInstance(1, -1), InvalidParameter);
}

TEST_CASE("factorisation and divisors") {
    using Factors = std::vector<std::pair<BigInt, int>>;
    CHECK(factorize(BigInt(360)) == Factors{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(BigInt(-1)).empty());
    const BigInt big = BigInt("1000003") * BigInt("1000033") * 4;
    CHECK(factorize(big) == Factors{{2, 2}, {BigInt("1000003"), 1}, {BigInt("1000033"), 1}});
    CHECK(divisors(BigInt(12)) == std::vector<BigInt>{1, 2, 3, 4, 6, 12});
    CHECK_THROWS_AS(factorize(BigInt(0)), InvalidParameter);
}

TEST_CASE("rational_roots examples") {
    CHECK(rational_roots(Poly({10, -12, -20, 8})) == std::vector<Rational>{Rational(1, 2)});
    CHECK(rational_roots(polynomial(FamilySpec::hermite(), 4)).empty());
    CHECK(rational_roots(Poly({-1, 2}) * Poly({2, 3})) == std::vector<Rational>{Rational(1, 2), Rational(-2, 3)});
    CHECK(rational_roots(Poly({0, 0, 1, 1})) == std::vector<Rational>{Rational(0), Rational(-1)});
    CHECK(rational_roots(Poly({Rational(1, 3), Rational(-1, 6)})) == std::vector<Rational>{Rational(2)});
    CHECK(rational_roots(Poly({7})).empty());
    CHECK_THROWS_AS(rational_roots(Poly()), ZeroPolynomial);
}

TEST_CASE("property: rational_roots recovers planted roots") {
    RationalSampler sampler(5150, 12);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> planted;
        Poly f({sampler.next_nonzero()});
        const int count = static_cast<int>(sampler.integer(1, 4));
        for (int i = 0; i < count; ++i) {
            const Rational root = sampler.next();
            f = f * Poly({-root, 1});
            if (std::find(planted.begin(), planted.end(), root) == planted.end()) planted.push_back(root);
        }
        f = f * Poly({3, 0, 1});
        std::sort(planted.begin(), planted.end(), std::greater<>());
        CHECK(rational_roots(f) == planted);
    }
}

TEST_CASE("property: Hermite nodes are irrational apart from zero") {
    for (int m = 2; m <= 10; ++m) {
        const std::vector<Rational> roots = rational_roots(polynomial(FamilySpec::hermite(), m));
        if (m % 2 == 0) {
            CHECK(roots.empty());
        } else {
            CHECK(roots == std::vector<Rational>{Rational(0)});
        }
    }
}

TEST_CASE("weights_from_nodes examples") {
    const auto rule = weights_from_nodes({Rational(1, 2), Rational(-1)}, 2);
    REQUIRE(rule.has_value());
    CHECK(rule->weights == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
    CHECK(rule->degree == 2);
    CHECK_FALSE(weights_from_nodes({Rational(1), Rational(-1)}, 2).has_value());
    const auto single = weights_from_nodes({Rational(0)}, 0);
    REQUIRE(single.has_value());
    CHECK(single->weights == std::vector<Rational>{Rational(1)});
    CHECK_THROWS_AS(weights_from_nodes({Rational(1), Rational(1)}, 2), DuplicateNodes);
    CHECK_THROWS_AS(weights_from_nodes({Rational(1), Rational(2), Rational(3)}, 1), InvalidParameter);
    CHECK_THROWS_AS(weights_from_nodes({}, 1), InvalidParameter);
}

TEST_CASE("quasi_hermite_rule examples") {
    const auto rule = quasi_hermite_rule(2, Rational(1));
    REQUIRE(rule.has_value());
    CHECK(rule->nodes == std::vector<Rational>{Rational(1, 2), Rational(-1)});
    CHECK(rule->weights == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
    CHECK(verify_hausdorff(*rule, 2));
    CHECK_FALSE(quasi_hermite_rule(2, Rational(0)).has_value());
    CHECK_FALSE(quasi_hermite_rule(3, Rational(-5)).has_value());
    CHECK(rational_roots(quasi(FamilySpec::hermite(), 3, Rational(-5))) == std::vector<Rational>{Rational(1, 2)});
    CHECK_THROWS_AS(quasi_hermite_rule(0, Rational(1)), InvalidParameter);
}

TEST_CASE("nonexistence verdict examples") {
    CHECK(nonexistence_verdict(4).kind == NonexistenceKind::ProvenNonexistent);
    const NonexistenceVerdict seven = nonexistence_verdict(7);
    CHECK(seven.kind == NonexistenceKind::LocallyObstructed);
    CHECK(seven.primes == std::vector<std::int64_t>{7});
    CHECK(nonexistence_verdict(1).kind == NonexistenceKind::Unknown);
    CHECK(to_string(NonexistenceKind::Unknown) == "Unknown");
    CHECK_THROWS_AS(nonexistence_verdict(0), InvalidParameter);
}

TEST_CASE("search_splitting_c examples") {
    const auto two = search_splitting_c(2, 1);
    REQUIRE(two.size() == 2);
    CHECK(two[0].first == Rational(-1));
    CHECK(two[0].second.nodes == std::vector<Rational>{Rational(1), Rational(-1, 2)});
    CHECK(two[1].first == Rational(1));
    CHECK(two[1].second.nodes == std::vector<Rational>{Rational(1, 2), Rational(-1)});
    CHECK(search_splitting_c(5, 3).empty());
    const auto one = search_splitting_c(1, 1);
    REQUIRE(one.size() == 3);
    for (const auto& [c, rule] : one) {
        CHECK(rule.nodes == std::vector<Rational>{-c / Rational(2)});
        CHECK(rule.weights == std::vector<Rational>{Rational(1)});
        CHECK(rule.degree == 0);
    }
    CHECK_THROWS_AS(search_splitting_c(2, 0), InvalidParameter);
}

TEST_CASE("property: two-node rules lie on the conic c^2 + 8 = square") {
    const int height = 12;
    const auto found = search_splitting_c(2, height);
    std::size_t expected = 0;
    for (long q = 1; q <= height; ++q) {
        for (long p = -height; p <= height; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const Rational c(p, q);
            if (is_rational_square(c * c + Rational(8))) ++expected;
        }
    }
    CHECK(found.size() == expected);
    for (const auto& [c, rule] : found) CHECK(is_rational_square(c * c + Rational(8)));
}

TEST_CASE("property: Riesz-Shohat round trip and the Stroud bound") {
    for (int m = 1; m <= 4; ++m) {
        for (const auto& [c, rule] : search_splitting_c(m, 8)) {
            CHECK(verify_hausdorff(rule, 2 * m - 2));
            CHECK_MESSAGE(verify_hausdorff(rule, 2 * m - 1) == c.is_zero(), "m=", m, " c=", c.to_string());
            CHECK_FALSE(verify_hausdorff(rule, 2 * m));
        }
    }
    const QuadratureRule gauss{{Rational(0)}, {Rational(1)}, 1};
    CHECK(verify_hausdorff(gauss, 1));
    CHECK_FALSE(verify_hausdorff(gauss, 2));

    RationalSampler sampler(99, 8);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> nodes;
        const int m = static_cast<int>(sampler.integer(1, 4));
        while (static_cast<int>(nodes.size()) < m) {
            const Rational y = sampler.next();
            if (std::find(nodes.begin(), nodes.end(), y) == nodes.end()) nodes.push_back(y);
        }
        const auto rule = weights_from_nodes(nodes, m - 1);
        REQUIRE(rule.has_value());
        CHECK(verify_hausdorff(*rule, m - 1));
        int exact = m - 1;
        while (verify_hausdorff(*rule, exact + 1)) ++exact;
        CHECK(exact <= 2 * m - 1);
    }
}

TEST_CASE("property: no splitting c when the discriminant is never a square") {
    for (int r : {2, 3, 4, 5, 6}) CHECK(search_splitting_c(r + 1, 5).empty());
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qop/poly.hpp"

namespace qop {

/// Nodes y_i and weights x_i of a rational rule for the Gaussian measure
/// pi^(-1/2) e^(-t^2) dt, meant to be exact up to `degree`.
struct QuadratureRule {
    std::vector<Rational> nodes;
    std::vector<Rational> weights;
    int degree = 0;

    friend bool operator==(const QuadratureRule&, const QuadratureRule&) = default;
};

/// The equations sum_{i=1..m} x_i y_i^k = a_k for 0 <= k <= n.
class HausdorffInstance {
public:
    HausdorffInstance(int m, int n);
    int m() const { return m_; }
    int n() const { return n_; }

private:
    int m_;
    int n_;
};

/// a_k = integral of t^k against the Gaussian measure: 0 for odd k,
/// (2j)! / (2^(2j) j!) for k = 2j.
Rational gaussian_moment(int k);

/// Integral of f against the Gaussian measure, sum_k f_k a_k.
Rational gaussian_integral(const Poly& f);

/// True iff sum x_i y_i^k = a_k exactly for every 0 <= k <= n.
bool verify_hausdorff(const QuadratureRule& rule, int n);

/// The necessary condition n <= 2m - 1 for a rational solution.
bool stroud_admissible(const HausdorffInstance& inst);

/// Prime factorisation of |n| (n != 0) as ascending (prime, exponent) pairs.
std::vector<std::pair<BigInt, int>> factorize(const BigInt& n);

/// Positive divisors of |n| (n != 0), ascending.
std::vector<BigInt> divisors(const BigInt& n);

/// Distinct rational roots of f, in descending order.
std::vector<Rational> rational_roots(const Poly& f);

/// Solves sum_i x_i y_i^k = a_k (0 <= k <= n) for the weights given distinct
/// nodes; absent when the overdetermined system is inconsistent.
std::optional<QuadratureRule> weights_from_nodes(const std::vector<Rational>& nodes, int n);

/// The rule whose nodes are the zeros of H_m + c H_{m-1}, when they are all
/// rational; exact up to degree 2m - 2.
std::optional<QuadratureRule> quasi_hermite_rule(int m, const Rational& c);

enum class NonexistenceKind { ProvenNonexistent, LocallyObstructed, Unknown };

std::string to_string(NonexistenceKind k);

struct NonexistenceVerdict {
    NonexistenceKind kind = NonexistenceKind::Unknown;
    std::vector<std::int64_t> primes;  ///< obstructing primes for LocallyObstructed
};

/// What is known about rational solutions of the (r+1, 2r) instance.
NonexistenceVerdict nonexistence_verdict(int r, std::int64_t prime_bound = 37);

/// Every c = p/q with |p| <= height, 1 <= q <= height, gcd(p, q) = 1 for which
/// quasi_hermite_rule(m, c) exists, ordered by (q, p).
std::vector<std::pair<Rational, QuadratureRule>> search_splitting_c(int m, int height);

}  // namespace qop

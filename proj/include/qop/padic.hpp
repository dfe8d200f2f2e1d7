#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qop/poly.hpp"

namespace qop {

/// p-adic valuation; infinite exactly for zero.
class Valuation {
public:
    static Valuation infinity() { return Valuation(); }
    explicit Valuation(long value) : value_(value) {}

    bool is_infinite() const { return !value_.has_value(); }
    /// Finite value; throws InvalidParameter when infinite.
    long value() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;
    /// Infinity compares greater than every finite value.
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

    /// Sum of valuations; infinity absorbs.
    friend Valuation operator+(const Valuation& a, const Valuation& b);

    std::string to_string() const;

private:
    Valuation() = default;
    std::optional<long> value_;
};

/// Primality by trial division.
bool is_prime(std::int64_t p);

/// All primes <= bound, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

Valuation v_p(const Rational& x, std::int64_t p);
Valuation v_p(const BigInt& x, std::int64_t p);

/// Euler's criterion; returns -1, 0 or +1.
int legendre_symbol(const BigInt& a, std::int64_t p);

bool is_square_Q2(const Rational& x);
bool is_square_Qp(const Rational& x, std::int64_t p);
/// Dispatches to the p = 2 or odd-p test.
bool is_square_in_Qp(const Rational& x, std::int64_t p);

/// f_r(c) = disc(H_{r+1} + c H_r) as an integer polynomial in c of degree 2r.
Poly curve_poly(int r);

enum class Verdict { Solvable, Unsolvable, Inconclusive };

std::string to_string(Verdict v);

/// Where a Q_p-point was certified. Affine points are x = center + O(p^precision);
/// reversed-chart points are x = 1/z with z = center + O(p^precision), z in pZ_p.
enum class Chart { Affine, Reversed, Infinity };

std::string to_string(Chart c);

struct Witness {
    Chart chart = Chart::Infinity;
    BigInt center;       ///< residue-disk center in the chart coordinate
    int precision = 0;   ///< disk radius exponent k
    /// Rational approximation of the x-coordinate (absent for infinity or z = 0).
    std::optional<Rational> x() const;
};

struct LocalSolvability {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Witness> witness;
    int depth_used = 0;
};

/// v_p(disc(f)) + 4, the default residue-tree depth.
int default_max_depth(const Poly& f, std::int64_t p);

/// Decides whether y^2 = f(x) has a Q_p-point (points at infinity included)
/// by a certified residue-disk search.
LocalSolvability is_locally_solvable(const Poly& f, std::int64_t p, std::optional<int> max_depth = std::nullopt);

/// Re-checks the square certificate carried by a Solvable witness.
bool verify_witness(const Poly& f, std::int64_t p, const Witness& w);

/// Primes p <= prime_bound with C_r(Q_p) empty, ascending. Throws
/// InconclusiveVerdict when some prime cannot be decided within the depth.
std::vector<std::int64_t> primes_with_no_points(int r, std::int64_t prime_bound,
                                                std::optional<int> max_depth = std::nullopt);

/// Whether disc(H_{n;c}) is a square in Q_2.
bool disc_square_test_Q2(int n, const Rational& c);

/// The 40-point sweep grid: v_2(c) in -3..3 with several unit parts, plus extras.
std::vector<Rational> q2_sweep_grid();

}  // namespace qop

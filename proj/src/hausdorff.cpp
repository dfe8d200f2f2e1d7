#include "qop/hausdorff.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qop/errors.hpp"
#include "qop/families.hpp"
#include "qop/padic.hpp"

namespace qop {

namespace {

constexpr unsigned long kTrialDivisionLimit = 10000;

bool probably_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

/// A nontrivial factor of the odd composite n by Pollard's rho.
BigInt rho_factor(const BigInt& n) {
    for (unsigned long shift = 1;; ++shift) {
        BigInt x = 2;
        BigInt y = 2;
        BigInt d = 1;
        auto step = [&](const BigInt& v) {
            BigInt out = v * v + shift;
            mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
            return out;
        };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            BigInt diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_into(BigInt n, std::map<BigInt, int>& out) {
    if (n == 1) return;
    if (probably_prime(n)) {
        ++out[n];
        return;
    }
    const BigInt d = rho_factor(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

/// Integer coefficients of a rational polynomial, scaled by a positive constant.
std::vector<BigInt> cleared(const Poly& f) {
    BigInt den = 1;
    for (const Rational& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<BigInt> out;
    for (const Rational& c : f.coeffs()) out.push_back(c.numerator() * (den / c.denominator()));
    return out;
}

BigInt eval_integer(const std::vector<BigInt>& c, long x) {
    BigInt acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

/// q^deg f(p/q) for integer coefficients, by homogeneous Horner.
BigInt homogeneous_value(const std::vector<BigInt>& c, const BigInt& p, const BigInt& q) {
    BigInt acc = 0;
    BigInt q_power = 1;
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * p + c[i] * q_power;
        q_power *= q;
    }
    return acc;
}

bool divides(const BigInt& d, const BigInt& n) {
    if (d == 0) return n == 0;
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Solves the square system a x = b over Q by Gaussian elimination; the
/// matrix must be nonsingular.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw InvalidParameter("singular moment system");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero()) continue;
            const Rational factor = a[row][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
            b[row] -= factor * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t row = n; row-- > 0;) {
        Rational acc = b[row];
        for (std::size_t j = row + 1; j < n; ++j) acc -= a[row][j] * x[j];
        x[row] = acc / a[row][row];
    }
    return x;
}

Rational moment_sum(const std::vector<Rational>& nodes, const std::vector<Rational>& weights, int k) {
    Rational acc;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * pow(nodes[i], k);
    return acc;
}

}  // namespace

HausdorffInstance::HausdorffInstance(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 0) throw InvalidParameter("Hausdorff instance needs m >= 1 and n >= 0");
}

Rational gaussian_moment(int k) {
    if (k < 0) throw InvalidParameter("moment index must be >= 0");
    if (k % 2 != 0) return Rational(0);
    // a_{2j} = (2j-1)!! / 2^j
    Rational out(1);
    for (int i = 1; i <= k / 2; ++i) out *= Rational(2 * i - 1, 2);
    return out;
}

Rational gaussian_integral(const Poly& f) {
    Rational acc;
    for (int k = 0; k <= f.degree(); ++k) acc += f.coeff(k) * gaussian_moment(k);
    return acc;
}

bool verify_hausdorff(const QuadratureRule& rule, int n) {
    if (n < 0) throw InvalidParameter("degree must be >= 0");
    if (rule.nodes.size() != rule.weights.size()) throw InvalidParameter("nodes and weights differ in length");
    for (int k = 0; k <= n; ++k) {
        if (moment_sum(rule.nodes, rule.weights, k) != gaussian_moment(k)) return false;
    }
    return true;
}

bool stroud_admissible(const HausdorffInstance& inst) { return inst.n() <= 2 * inst.m() - 1; }

std::vector<std::pair<BigInt, int>> factorize(const BigInt& n) {
    if (n == 0) throw InvalidParameter("cannot factor zero");
    BigInt rest = abs(n);
    std::map<BigInt, int> found;
    for (unsigned long d = 2; d <= kTrialDivisionLimit && rest != 1; ++d) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
            ++found[BigInt(d)];
            rest /= d;
        }
    }
    factor_into(rest, found);
    return {found.begin(), found.end()};
}

std::vector<BigInt> divisors(const BigInt& n) {
    std::vector<BigInt> out{1};
    for (const auto& [prime, exponent] : factorize(n)) {
        const std::size_t base = out.size();
        BigInt power = 1;
        for (int e = 1; e <= exponent; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> rational_roots(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("rational roots of the zero polynomial");
    std::vector<BigInt> c = cleared(f);
    std::vector<Rational> roots;
    std::size_t low = 0;
    while (c[low] == 0) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
    }
    if (c.size() > 1) {
        const BigInt at_one = eval_integer(c, 1);
        const BigInt at_minus_one = eval_integer(c, -1);
        const std::vector<BigInt> numerators = divisors(c.front());
        for (const BigInt& q : divisors(c.back())) {
            for (const BigInt& magnitude : numerators) {
                if (gcd(magnitude, q) != 1) continue;
                for (const BigInt& p : {magnitude, BigInt(-magnitude)}) {
                    // f(1) and f(-1) are divisible by q - p and q + p for a root p/q.
                    if (!divides(q - p, at_one) || !divides(q + p, at_minus_one)) continue;
                    if (homogeneous_value(c, p, q) == 0) roots.emplace_back(p, q);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

std::optional<QuadratureRule> weights_from_nodes(const std::vector<Rational>& nodes, int n) {
    const std::size_t m = nodes.size();
    if (m == 0) throw InvalidParameter("at least one node is required");
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (nodes[i] == nodes[j]) throw DuplicateNodes("node " + nodes[i].to_string() + " repeats");
        }
    }
    if (n < static_cast<int>(m) - 1) throw InvalidParameter("need n >= number of nodes - 1");
    std::vector<std::vector<Rational>> vandermonde(m, std::vector<Rational>(m));
    std::vector<Rational> rhs(m);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) vandermonde[k][i] = pow(nodes[i], static_cast<long>(k));
        rhs[k] = gaussian_moment(static_cast<int>(k));
    }
    QuadratureRule rule{nodes, solve_linear(std::move(vandermonde), std::move(rhs)), n};
    for (int k = static_cast<int>(m); k <= n; ++k) {
        if (moment_sum(rule.nodes, rule.weights, k) != gaussian_moment(k)) return std::nullopt;
    }
    return rule;
}

std::optional<QuadratureRule> quasi_hermite_rule(int m, const Rational& c) {
    if (m < 1) throw InvalidParameter("quasi_hermite_rule needs m >= 1");
    const std::vector<Rational> roots = rational_roots(quasi(FamilySpec::hermite(), m, c));
    if (static_cast<int>(roots.size()) != m) return std::nullopt;
    return weights_from_nodes(roots, 2 * m - 2);
}

std::string to_string(NonexistenceKind k) {
    switch (k) {
        case NonexistenceKind::ProvenNonexistent: return "ProvenNonexistent";
        case NonexistenceKind::LocallyObstructed: return "LocallyObstructed";
        case NonexistenceKind::Unknown: return "Unknown";
    }
    return "?";
}

NonexistenceVerdict nonexistence_verdict(int r, std::int64_t prime_bound) {
    if (r < 1) throw InvalidParameter("nonexistence_verdict needs r >= 1");
    const int residue = r % 8;
    if (residue >= 2 && residue <= 6) return {NonexistenceKind::ProvenNonexistent, {}};
    std::vector<std::int64_t> primes = primes_with_no_points(r, prime_bound);
    if (primes.empty()) return {NonexistenceKind::Unknown, {}};
    return {NonexistenceKind::LocallyObstructed, std::move(primes)};
}

std::vector<std::pair<Rational, QuadratureRule>> search_splitting_c(int m, int height) {
    if (m < 1 || height < 1) throw InvalidParameter("search_splitting_c needs m >= 1 and height >= 1");
    std::vector<std::pair<Rational, QuadratureRule>> out;
    for (long q = 1; q <= height; ++q) {
        for (long p = -height; p <= height; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const Rational c(p, q);
            if (auto rule = quasi_hermite_rule(m, c)) out.emplace_back(c, std::move(*rule));
        }
    }
    return out;
}

}  // namespace qop

#include "qop/padic.hpp"

#include <algorithm>
#include <future>

#include "qop/compact.hpp"
#include "qop/errors.hpp"
#include "qop/resultant.hpp"

namespace qop {

namespace {

using Coeffs = std::vector<BigInt>;

void require_prime(std::int64_t p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

void require_odd_prime(std::int64_t p) {
    require_prime(p);
    if (p == 2) throw EvenPrime("an odd prime is required");
}

/// Strips every factor p from x and returns how many were removed; x != 0.
long remove_factor(BigInt& x, std::int64_t p) {
    const BigInt bp(static_cast<long>(p));
    return static_cast<long>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), bp.get_mpz_t()));
}

unsigned long residue(const BigInt& x, unsigned long m) { return mpz_fdiv_ui(x.get_mpz_t(), m); }

/// Square test for a p-adic unit represented by an integer coprime to p.
bool unit_is_square(const BigInt& u, std::int64_t p) {
    if (p == 2) return residue(u, 8) == 1;
    return legendre_symbol(u, p) == 1;
}

Coeffs integer_coeffs(const Poly& f) {
    Coeffs out;
    out.reserve(f.coeffs().size());
    for (const Rational& c : f.coeffs()) {
        if (!c.is_integer()) throw MalformedCurve("curve polynomial must have integer coefficients");
        out.push_back(c.numerator());
    }
    return out;
}

/// Coefficients of h(a + t) in t, by repeated synthetic division.
Coeffs taylor_shift(Coeffs h, const BigInt& a) {
    Coeffs out;
    out.reserve(h.size());
    while (!h.empty()) {
        BigInt acc = 0;
        Coeffs quotient(h.size() - 1);
        for (std::size_t i = h.size(); i-- > 0;) {
            acc = acc * a + h[i];
            if (i > 0) quotient[i - 1] = acc;
        }
        out.push_back(acc);
        h = std::move(quotient);
    }
    return out;
}

enum class NodeOutcome { Point, Prune, Subdivide };

/// Examines the disk center + p^k Z_p. Writing h(center + p^k t) =
/// T0 (1 + p^d w(t)) with w integral, a large enough d forces every value in
/// the disk into the square class of T0, which decides the disk outright.
NodeOutcome classify_node(const Coeffs& h, std::int64_t p, const BigInt& center, int k) {
    const Coeffs t = taylor_shift(h, center);
    if (t[0] == 0) return NodeOutcome::Point;
    BigInt u0 = t[0];
    const long v0 = remove_factor(u0, p);
    std::optional<long> tail;
    for (std::size_t j = 1; j < t.size(); ++j) {
        if (t[j] == 0) continue;
        BigInt tj = t[j];
        const long vj = remove_factor(tj, p) + static_cast<long>(k) * static_cast<long>(j);
        if (!tail || vj < *tail) tail = vj;
    }
    if (tail && v0 >= *tail) return NodeOutcome::Subdivide;
    if (v0 % 2 != 0) return NodeOutcome::Prune;
    const std::optional<long> slack = tail ? std::optional<long>(*tail - v0) : std::nullopt;
    if (p != 2 || !slack || *slack >= 3) {
        return unit_is_square(u0, p) ? NodeOutcome::Point : NodeOutcome::Prune;
    }
    if (*slack == 2 && residue(u0, 4) == 3) return NodeOutcome::Prune;
    return NodeOutcome::Subdivide;
}

struct SearchState {
    int depth_used = 0;
    bool inconclusive = false;
};

std::optional<Witness> search_chart(const Coeffs& h, std::int64_t p, int start_level, int max_depth, Chart chart,
                                    SearchState& state) {
    struct Node {
        BigInt center;
        int level;
    };
    std::vector<Node> stack{{BigInt(0), start_level}};
    const BigInt bp(static_cast<long>(p));
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        state.depth_used = std::max(state.depth_used, node.level);
        switch (classify_node(h, p, node.center, node.level)) {
            case NodeOutcome::Point: return Witness{chart, node.center, node.level};
            case NodeOutcome::Prune: continue;
            case NodeOutcome::Subdivide: break;
        }
        if (node.level >= max_depth) {
            state.inconclusive = true;
            continue;
        }
        const BigInt step = pow(bp, static_cast<unsigned long>(node.level));
        for (std::int64_t i = p - 1; i >= 0; --i) {
            stack.push_back({node.center + BigInt(static_cast<long>(i)) * step, node.level + 1});
        }
    }
    return std::nullopt;
}

Coeffs validated_curve(const Poly& f) {
    if (f.is_zero()) throw MalformedCurve("curve polynomial is zero");
    if (f.degree() < 2 || f.degree() % 2 != 0) throw MalformedCurve("curve polynomial must have even degree >= 2");
    return integer_coeffs(f);
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

long Valuation::value() const {
    if (!value_) throw InvalidParameter("valuation of zero is infinite");
    return *value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) {
        return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return *a.value_ <=> *b.value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
    return Valuation(*a.value_ + *b.value_);
}

std::string Valuation::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p <= bound; ++p) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

Valuation v_p(const BigInt& x, std::int64_t p) {
    require_prime(p);
    if (x == 0) return Valuation::infinity();
    BigInt y = x;
    return Valuation(remove_factor(y, p));
}

Valuation v_p(const Rational& x, std::int64_t p) {
    require_prime(p);
    if (x.is_zero()) return Valuation::infinity();
    return Valuation(v_p(x.numerator(), p).value() - v_p(x.denominator(), p).value());
}

int legendre_symbol(const BigInt& a, std::int64_t p) {
    require_odd_prime(p);
    const BigInt bp(static_cast<long>(p));
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), bp.get_mpz_t());
    if (r == 0) return 0;
    const BigInt e = (bp - 1) / 2;
    BigInt out;
    mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), bp.get_mpz_t());
    return out == 1 ? 1 : -1;
}

bool is_square_Q2(const Rational& x) {
    if (x.is_zero()) return true;
    BigInt num = x.numerator();
    BigInt den = x.denominator();
    const long v = remove_factor(num, 2) - remove_factor(den, 2);
    // num/den and num*den differ by the unit square den^2.
    return v % 2 == 0 && unit_is_square(num * den, 2);
}

bool is_square_Qp(const Rational& x, std::int64_t p) {
    require_odd_prime(p);
    if (x.is_zero()) return true;
    BigInt num = x.numerator();
    BigInt den = x.denominator();
    const long v = remove_factor(num, p) - remove_factor(den, p);
    return v % 2 == 0 && unit_is_square(num * den, p);
}

bool is_square_in_Qp(const Rational& x, std::int64_t p) {
    require_prime(p);
    return p == 2 ? is_square_Q2(x) : is_square_Qp(x, p);
}

Poly curve_poly(int r) {
    if (r < 1) throw InvalidParameter("curve_poly needs r >= 1");
    Poly f = disc_as_poly_in_c(FamilySpec::hermite(), r + 1);
    integer_coeffs(f);
    return f;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Solvable: return "Solvable";
        case Verdict::Unsolvable: return "Unsolvable";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string to_string(Chart c) {
    switch (c) {
        case Chart::Affine: return "affine";
        case Chart::Reversed: return "reversed";
        case Chart::Infinity: return "infinity";
    }
    return "?";
}

std::optional<Rational> Witness::x() const {
    switch (chart) {
        case Chart::Affine: return Rational(center);
        case Chart::Reversed:
            if (center == 0) return std::nullopt;
            return Rational(BigInt(1), center);
        case Chart::Infinity: return std::nullopt;
    }
    return std::nullopt;
}

int default_max_depth(const Poly& f, std::int64_t p) {
    require_prime(p);
    Rational d = discriminant(f);
    if (d.is_zero()) d = discriminant(f.divmod(poly_gcd(f, f.derivative())).first);
    const Valuation v = v_p(d, p);
    return static_cast<int>(v.is_infinite() ? 0 : v.value()) + 4;
}

LocalSolvability is_locally_solvable(const Poly& f, std::int64_t p, std::optional<int> max_depth) {
    require_prime(p);
    const Coeffs coeffs = validated_curve(f);
    if (max_depth && *max_depth < 1) throw InvalidParameter("max_depth must be >= 1");
    const int depth = max_depth ? *max_depth : default_max_depth(f, p);

    if (is_square_in_Qp(f.leading(), p)) {
        return {Verdict::Solvable, Witness{Chart::Infinity, BigInt(0), 0}, 0};
    }
    SearchState state;
    if (auto w = search_chart(coeffs, p, 0, depth, Chart::Affine, state)) {
        return {Verdict::Solvable, *w, state.depth_used};
    }
    const Coeffs reversed(coeffs.rbegin(), coeffs.rend());
    if (auto w = search_chart(reversed, p, 1, depth, Chart::Reversed, state)) {
        return {Verdict::Solvable, *w, state.depth_used};
    }
    return {state.inconclusive ? Verdict::Inconclusive : Verdict::Unsolvable, std::nullopt, state.depth_used};
}

bool verify_witness(const Poly& f, std::int64_t p, const Witness& w) {
    require_prime(p);
    const Coeffs coeffs = validated_curve(f);
    switch (w.chart) {
        case Chart::Infinity: return is_square_in_Qp(f.leading(), p);
        case Chart::Affine:
            return w.precision >= 0 && classify_node(coeffs, p, w.center, w.precision) == NodeOutcome::Point;
        case Chart::Reversed: {
            if (w.precision < 1) return false;
            if (w.center != 0 && v_p(w.center, p).value() < 1) return false;
            const Coeffs reversed(coeffs.rbegin(), coeffs.rend());
            return classify_node(reversed, p, w.center, w.precision) == NodeOutcome::Point;
        }
    }
    return false;
}

std::vector<std::int64_t> primes_with_no_points(int r, std::int64_t prime_bound, std::optional<int> max_depth) {
    if (r < 1) throw InvalidParameter("r must be >= 1");
    if (prime_bound < 2) throw InvalidParameter("prime bound must be >= 2");
    const Poly f = curve_poly(r);
    const std::vector<std::int64_t> primes = primes_up_to(prime_bound);
    std::vector<std::future<LocalSolvability>> jobs;
    jobs.reserve(primes.size());
    for (std::int64_t p : primes) {
        jobs.push_back(std::async(std::launch::async, [&f, p, max_depth] { return is_locally_solvable(f, p, max_depth); }));
    }
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const LocalSolvability result = jobs[i].get();
        if (result.verdict == Verdict::Inconclusive) {
            throw InconclusiveVerdict(r, primes[i], result.depth_used);
        }
        if (result.verdict == Verdict::Unsolvable) out.push_back(primes[i]);
    }
    return out;
}

bool disc_square_test_Q2(int n, const Rational& c) {
    if (n < 2) throw InvalidParameter("disc_square_test_Q2 needs n >= 2");
    return is_square_Q2(disc_family(FamilySpec::hermite(), n, c));
}

std::vector<Rational> q2_sweep_grid() {
    std::vector<Rational> grid;
    const std::vector<Rational> units{1, -1, 3, Rational(5, 3), Rational(-7, 9)};
    for (int e = -3; e <= 3; ++e) {
        const Rational scale = pow(Rational(2), e);
        for (const Rational& u : units) grid.push_back(u * scale);
    }
    for (const Rational& extra : {Rational(0), Rational(1, 3), Rational(-3, 5), Rational(11, 7), Rational(15)}) {
        grid.push_back(extra);
    }
    return grid;
}

}  // namespace qop

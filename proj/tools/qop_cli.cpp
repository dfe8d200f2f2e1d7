#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qop/compact.hpp"
#include "qop/errors.hpp"
#include "qop/families.hpp"
#include "qop/hausdorff.hpp"
#include "qop/padic.hpp"
#include "qop/random.hpp"
#include "qop/resultant.hpp"
#include "qop/serialize.hpp"

namespace {

using qop::Json;
using qop::Rational;

/// Malformed option value detected after CLI11 parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct Options {
    std::string family;
    std::string alpha = "0";
    std::string beta = "0";
    std::optional<std::string> lambda;
    int n = 0;
    std::string c = "0";
    std::string s = "0";
    std::string t = "0";
    std::optional<int> r;
    int r_max = 8;
    std::int64_t p = 2;
    std::int64_t p_max = 37;
    int m = 1;
    int height = 1;
    std::optional<int> max_depth;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::optional<std::string> curve;
    std::optional<int> sweep_n;
};

Rational parse_rational(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const qop::InvalidParameter&) {
        throw UsageError("--" + flag + ": expected p/q, got '" + text + "'");
    }
}

qop::FamilySpec parse_family(const Options& o) {
    const Rational alpha = parse_rational("alpha", o.alpha);
    const Rational beta = parse_rational("beta", o.beta);
    if (o.family == "jacobi") return qop::FamilySpec::jacobi(alpha, beta);
    if (o.family == "laguerre") return qop::FamilySpec::laguerre(alpha);
    if (o.family == "hermite") return qop::FamilySpec::hermite();
    if (o.family == "gegenbauer") {
        if (!o.lambda) throw UsageError("--lambda: required for --family gegenbauer (form p/q)");
        return qop::FamilySpec::gegenbauer(parse_rational("lambda", *o.lambda));
    }
    if (o.family == "chebyshev-t") return qop::FamilySpec::chebyshev_t();
    if (o.family == "chebyshev-u") return qop::FamilySpec::chebyshev_u();
    throw UsageError("--family: unknown family '" + o.family + "'");
}

// --- text rendering -------------------------------------------------------

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "-";
    return j.dump();
}

bool is_flat_array(const Json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

void render_text(const Json& j, std::ostream& out, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_primitive()) {
        out << pad << scalar_text(j) << '\n';
    } else if (is_flat_array(j)) {
        std::string line;
        for (const Json& e : j) line += (line.empty() ? "" : ", ") + scalar_text(e);
        out << pad << "[" << line << "]\n";
    } else if (j.is_array()) {
        for (const Json& e : j) {
            render_text(e, out, indent);
            if (!e.is_primitive()) out << '\n';
        }
    } else {
        std::size_t width = 0;
        for (const auto& item : j.items()) width = std::max(width, item.key().size());
        for (const auto& item : j.items()) {
            const Json& v = item.value();
            out << pad << item.key() << std::string(width - item.key().size(), ' ') << " : ";
            if (v.is_primitive()) {
                out << scalar_text(v) << '\n';
            } else if (is_flat_array(v)) {
                std::string line;
                for (const Json& e : v) line += (line.empty() ? "" : ", ") + scalar_text(e);
                out << "[" << line << "]\n";
            } else {
                out << '\n';
                render_text(v, out, indent + 2);
            }
        }
    }
}

void emit(const Json& j, const Options& o) {
    if (o.format == "text") {
        render_text(j, std::cout);
    } else {
        std::cout << j.dump(2) << '\n';
    }
}

// --- subcommands ----------------------------------------------------------

int run_poly(const Options& o, bool with_c) {
    const qop::FamilySpec spec = parse_family(o);
    const qop::Poly f = with_c ? qop::quasi(spec, o.n, parse_rational("c", o.c)) : qop::polynomial(spec, o.n);
    emit(qop::to_json(f), o);
    return kExitOk;
}

int run_resultant(const Options& o) {
    const qop::FamilySpec spec = parse_family(o);
    emit(qop::to_json(qop::res_family(spec, o.n, parse_rational("s", o.s), parse_rational("t", o.t))), o);
    return kExitOk;
}

int run_discriminant(const Options& o) {
    const qop::FamilySpec spec = parse_family(o);
    emit(qop::to_json(qop::disc_family(spec, o.n, parse_rational("c", o.c))), o);
    return kExitOk;
}

int run_disc_poly(const Options& o) {
    emit(qop::to_json(qop::disc_as_poly_in_c(parse_family(o), o.n)), o);
    return kExitOk;
}

constexpr int kVerifySamples = 25;

int run_res_verify(const Options& o) {
    const qop::FamilySpec spec = parse_family(o);
    qop::RationalSampler sampler(o.seed);
    Json mismatches = Json::array();
    int checked = 0;
    for (int n = 2; n <= o.n; ++n) {
        for (int i = 0; i < kVerifySamples; ++i) {
            const Rational s = sampler.next();
            const Rational t = i == 0 ? Rational(0) : sampler.next();
            const Rational compact = qop::res_family(spec, n, s, t);
            const Rational oracle = qop::resultant(qop::quasi(spec, n, s), qop::quasi(spec, n - 1, t));
            ++checked;
            if (compact != oracle) {
                mismatches.push_back(Json{{"n", n}, {"s", s.to_string()}, {"t", t.to_string()},
                                          {"compact", compact.to_string()}, {"sylvester", oracle.to_string()}});
            }
        }
    }
    emit(Json{{"family", spec.describe()}, {"checked", checked}, {"mismatches", mismatches}}, o);
    return mismatches.empty() ? kExitOk : kExitDomain;
}

int run_disc_verify(const Options& o) {
    const qop::FamilySpec spec = parse_family(o);
    qop::RationalSampler sampler(o.seed);
    Json mismatches = Json::array();
    int checked = 0;
    for (int n = 2; n <= o.n; ++n) {
        std::vector<Rational> cs{Rational(0)};
        for (const Rational& pole : qop::disc_formula_poles(spec, n)) cs.push_back(pole);
        while (static_cast<int>(cs.size()) < kVerifySamples) cs.push_back(sampler.next());
        for (const Rational& c : cs) {
            const Rational compact = qop::disc_family(spec, n, c);
            const Rational oracle = qop::discriminant(qop::quasi(spec, n, c));
            ++checked;
            if (compact != oracle) {
                mismatches.push_back(Json{{"n", n}, {"c", c.to_string()}, {"compact", compact.to_string()},
                                          {"sylvester", oracle.to_string()}});
            }
        }
    }
    emit(Json{{"family", spec.describe()}, {"checked", checked}, {"mismatches", mismatches}}, o);
    return mismatches.empty() ? kExitOk : kExitDomain;
}

int run_moments(const Options& o) {
    if (o.n < 0) throw UsageError("--n: expected a nonnegative integer");
    Json out = Json::array();
    for (int k = 0; k <= o.n; ++k) out.push_back(qop::to_json(qop::gaussian_moment(k)));
    emit(out, o);
    return kExitOk;
}

int run_quadrature(const Options& o) {
    const Rational c = parse_rational("c", o.c);
    const std::optional<qop::QuadratureRule> rule = qop::quasi_hermite_rule(o.m, c);
    Json out{{"m", o.m}, {"c", c.to_string()}, {"rule", nullptr}};
    if (rule) {
        out["rule"] = qop::to_json(*rule);
        out["verified"] = qop::verify_hausdorff(*rule, rule->degree);
    }
    emit(out, o);
    return kExitOk;
}

int run_split_search(const Options& o) {
    Json out = Json::array();
    for (const auto& [c, rule] : qop::search_splitting_c(o.m, o.height)) {
        out.push_back(Json{{"c", c.to_string()}, {"rule", qop::to_json(rule)}});
    }
    emit(out, o);
    return kExitOk;
}

int run_local_solve(const Options& o) {
    qop::Poly f;
    if (o.curve) {
        try {
            f = qop::poly_from_json(Json::parse(*o.curve));
        } catch (const Json::exception&) {
            throw UsageError("--curve: expected a JSON integer array, lowest degree first");
        } catch (const qop::InvalidParameter&) {
            throw UsageError("--curve: expected a JSON integer array, lowest degree first");
        }
    } else if (o.r) {
        f = qop::curve_poly(*o.r);
    } else {
        throw UsageError("local-solve: one of --r int or --curve [..] is required");
    }
    const qop::LocalSolvability result = qop::is_locally_solvable(f, o.p, o.max_depth);
    Json out = qop::to_json(result);
    out["p"] = o.p;
    emit(out, o);
    return result.verdict == qop::Verdict::Inconclusive ? kExitInconclusive : kExitOk;
}

/// r-by-primes table for --format text; JSON is emitted unchanged.
void emit_table(const Json& table, const Options& o) {
    if (o.format != "text") {
        emit(table, o);
        return;
    }
    std::cout << " r  primes (p <= " << table["p_max"].get<std::int64_t>() << ")\n";
    for (const Json& row : table["rows"]) {
        std::string primes;
        for (const Json& p : row["primes"]) primes += (primes.empty() ? "" : ",") + p.dump();
        const std::string r = std::to_string(row["r"].get<int>());
        std::cout << std::string(2 - std::min<std::size_t>(2, r.size()), ' ') << r << "  "
                  << (primes.empty() ? "-" : primes) << '\n';
    }
    if (table.contains("inconclusive")) {
        const Json& cell = table["inconclusive"];
        std::cout << "inconclusive at r=" << cell["r"].dump() << ", p=" << cell["p"].dump()
                  << ", depth " << cell["depth_used"].dump() << '\n';
    }
}

int run_table1(const Options& o) {
    if (o.r_max < 1) throw UsageError("--r-max: expected an integer >= 1");
    std::vector<std::future<std::vector<std::int64_t>>> jobs;
    for (int r = 1; r <= o.r_max; ++r) {
        jobs.push_back(std::async(std::launch::async, [r, &o] { return qop::primes_with_no_points(r, o.p_max, o.max_depth); }));
    }
    Json rows = Json::array();
    for (int r = 1; r <= o.r_max; ++r) {
        try {
            rows.push_back(Json{{"r", r}, {"primes", jobs[static_cast<std::size_t>(r - 1)].get()}});
        } catch (const qop::InconclusiveVerdict& e) {
            Json out{{"p_max", o.p_max}, {"rows", rows},
                     {"inconclusive", Json{{"r", e.r()}, {"p", e.p()}, {"depth_used", e.depth_used()}}}};
            for (std::size_t rest = static_cast<std::size_t>(r); rest < jobs.size(); ++rest) {
                try {
                    jobs[rest].get();
                } catch (const qop::Error&) {
                }
            }
            emit_table(out, o);
            return kExitInconclusive;
        }
    }
    emit_table(Json{{"p_max", o.p_max}, {"rows", rows}}, o);
    return kExitOk;
}

int run_not_square_sweep(const Options& o) {
    std::vector<int> ns{3, 4, 5, 6, 7, 11, 12, 13, 14, 15};
    if (o.sweep_n) ns = {*o.sweep_n};
    const std::vector<Rational> grid = qop::q2_sweep_grid();
    Json squares = Json::array();
    int checked = 0;
    for (int n : ns) {
        for (const Rational& c : grid) {
            ++checked;
            if (qop::disc_square_test_Q2(n, c)) squares.push_back(Json{{"n", n}, {"c", c.to_string()}});
        }
    }
    emit(Json{{"checked", checked}, {"squares", squares}}, o);
    return kExitOk;
}

void add_family_options(CLI::App* sub, Options& o) {
    sub->add_option("--family", o.family, "jacobi|laguerre|hermite|gegenbauer|chebyshev-t|chebyshev-u")
        ->required()
        ->check(CLI::IsMember({"jacobi", "laguerre", "hermite", "gegenbauer", "chebyshev-t", "chebyshev-u"}));
    sub->add_option("--alpha", o.alpha, "Jacobi/Laguerre alpha (p/q)");
    sub->add_option("--beta", o.beta, "Jacobi beta (p/q)");
    sub->add_option("--lambda", o.lambda, "Gegenbauer lambda (p/q)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact quasi-orthogonal polynomial toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "json|text")->check(CLI::IsMember({"json", "text"}));

    auto* poly = app.add_subcommand("poly", "Family member P_n, or P_n + c P_{n-1} when --c is given");
    add_family_options(poly, o);
    poly->add_option("--n", o.n, "degree")->required();
    auto* poly_c = poly->add_option("--c", o.c, "quasi parameter (p/q)");

    auto* res = app.add_subcommand("resultant", "Res(P_n + s P_{n-1}, P_{n-1} + t P_{n-2}) by compact formula");
    add_family_options(res, o);
    res->add_option("--n", o.n, "degree >= 2")->required();
    res->add_option("--s", o.s, "p/q")->required();
    res->add_option("--t", o.t, "p/q")->required();

    auto* disc = app.add_subcommand("discriminant", "disc(P_n + c P_{n-1}) by compact formula");
    add_family_options(disc, o);
    disc->add_option("--n", o.n, "degree >= 1")->required();
    disc->add_option("--c", o.c, "p/q")->required();

    auto* disc_poly = app.add_subcommand("disc-poly", "disc(P_n + c P_{n-1}) as a polynomial in c");
    add_family_options(disc_poly, o);
    disc_poly->add_option("--n", o.n, "degree >= 2")->required();

    auto* res_verify = app.add_subcommand("res-verify", "Compare compact resultants with Sylvester, n = 2..N");
    add_family_options(res_verify, o);
    res_verify->add_option("--n", o.n, "largest degree N")->required();
    res_verify->add_option("--seed", o.seed, "sampler seed");

    auto* disc_verify = app.add_subcommand("disc-verify", "Compare compact discriminants with Sylvester, n = 2..N");
    add_family_options(disc_verify, o);
    disc_verify->add_option("--n", o.n, "largest degree N")->required();
    disc_verify->add_option("--seed", o.seed, "sampler seed");

    auto* moments = app.add_subcommand("moments", "Gaussian moments a_0..a_n");
    moments->add_option("--n", o.n, "highest index")->required();

    auto* quadrature = app.add_subcommand("quadrature", "Rational rule from the zeros of H_m + c H_{m-1}");
    quadrature->add_option("--m", o.m, "number of nodes")->required();
    quadrature->add_option("--c", o.c, "p/q")->required();

    auto* split = app.add_subcommand("split-search", "All c of bounded height giving a rational rule");
    split->add_option("--m", o.m, "number of nodes")->required();
    split->add_option("--height", o.height, "height bound")->required();

    auto* local = app.add_subcommand("local-solve", "Q_p-solvability of y^2 = f_r(x) or of a given curve");
    local->add_option("--r", o.r, "curve index");
    local->add_option("--curve", o.curve, "JSON integer coefficient array, lowest degree first");
    local->add_option("--p", o.p, "prime")->required();
    local->add_option("--max-depth", o.max_depth, "residue-tree depth");

    auto* table1 = app.add_subcommand("table1", "Primes p <= p-max with C_r(Q_p) empty, r = 1..r-max");
    table1->add_option("--r-max", o.r_max, "largest r");
    table1->add_option("--p-max", o.p_max, "prime bound");
    table1->add_option("--max-depth", o.max_depth, "residue-tree depth");

    auto* sweep = app.add_subcommand("not-square-sweep", "Q_2 square test of disc(H_n + c H_{n-1}) over the c-grid");
    sweep->add_option("--n", o.sweep_n, "restrict to one degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (poly->parsed()) return run_poly(o, poly_c->count() > 0);
        if (res->parsed()) return run_resultant(o);
        if (disc->parsed()) return run_discriminant(o);
        if (disc_poly->parsed()) return run_disc_poly(o);
        if (res_verify->parsed()) return run_res_verify(o);
        if (disc_verify->parsed()) return run_disc_verify(o);
        if (moments->parsed()) return run_moments(o);
        if (quadrature->parsed()) return run_quadrature(o);
        if (split->parsed()) return run_split_search(o);
        if (local->parsed()) return run_local_solve(o);
        if (table1->parsed()) return run_table1(o);
        if (sweep->parsed()) return run_not_square_sweep(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qop::InconclusiveVerdict& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return kExitInconclusive;
    } catch (const qop::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}

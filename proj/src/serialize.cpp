#include "qop/serialize.hpp"

#include "qop/errors.hpp"

namespace qop {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Poly& f) {
    Json out = Json::array();
    for (const Rational& c : f.coeffs()) out.push_back(to_json(c));
    return out;
}

Json to_json(const QuadratureRule& rule) {
    Json nodes = Json::array();
    Json weights = Json::array();
    for (const Rational& y : rule.nodes) nodes.push_back(to_json(y));
    for (const Rational& x : rule.weights) weights.push_back(to_json(x));
    return Json{{"nodes", nodes}, {"weights", weights}, {"degree", rule.degree}};
}

Json to_json(const LocalSolvability& result) {
    Json witness = nullptr;
    if (result.witness) {
        const Witness& w = *result.witness;
        if (w.chart == Chart::Infinity) {
            witness = "infinity";
        } else {
            const std::optional<Rational> x = w.x();
            witness = Json{{"chart", to_string(w.chart)},
                           {"center", w.center.get_str()},
                           {"x", x ? to_json(*x) : Json("infinity")},
                           {"precision", w.precision}};
        }
    }
    return Json{{"verdict", to_string(result.verdict)}, {"witness", witness}, {"depth_used", result.depth_used}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw InvalidParameter("expected a rational as an integer or a \"p/q\" string");
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidParameter("expected a JSON coefficient array");
    std::vector<Rational> coeffs;
    for (const Json& c : j) coeffs.push_back(rational_from_json(c));
    return Poly(std::move(coeffs));
}

QuadratureRule rule_from_json(const Json& j) {
    QuadratureRule rule;
    for (const Json& y : j.at("nodes")) rule.nodes.push_back(rational_from_json(y));
    for (const Json& x : j.at("weights")) rule.weights.push_back(rational_from_json(x));
    rule.degree = j.at("degree").get<int>();
    return rule;
}

}  // namespace qop

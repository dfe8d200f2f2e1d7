#pragma once

#include <json.hpp>

#include "qop/hausdorff.hpp"
#include "qop/padic.hpp"

namespace qop {

using Json = nlohmann::ordered_json;

/// "p/q", or "p" when q = 1.
Json to_json(const Rational& r);
/// Coefficient strings, lowest degree first.
Json to_json(const Poly& f);
/// {"nodes": [...], "weights": [...], "degree": t}
Json to_json(const QuadratureRule& rule);
/// {"verdict": "...", "witness": ..., "depth_used": n}
Json to_json(const LocalSolvability& result);

Rational rational_from_json(const Json& j);
/// Accepts an array of integers or rational strings, lowest degree first.
Poly poly_from_json(const Json& j);
QuadratureRule rule_from_json(const Json& j);

}  // namespace qop

#pragma once

#include "json.hpp"
#include "mlr/factorization.hpp"
#include "mlr/pieri.hpp"
#include "mlr/sweep.hpp"

namespace mlr {

using nlohmann::json;

// {"num": [[q_exp, t_exp, "coeff"], ...], "den": [...]}, terms ascending.
json to_json(const QtRational& f);
// Raises ParseError on malformed input; the result is renormalized.
QtRational qt_rational_from_json(const json& j);

json to_json(const Partition& p);  // parts as an array
json to_json(const Tableau& T);    // {"shape": [...], "rows": [[...], ...]}
// [{"index": [...], "coeff": ...}, ...] sorted by index
json to_json(const Expansion& e);
json to_json(const SignedHook& h);
// {"laurent", "u_count", "l_count", "factored", "monomial": [a, b, sign]}
json to_json(const StanleyReport& r);
json to_json(const InstanceResult& r);

}  // namespace mlr

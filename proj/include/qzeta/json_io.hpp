#pragma once

#include "qzeta/log_scalar.hpp"

#include "json.hpp"

namespace qzeta {

using Json = nlohmann::ordered_json;

// Coefficients as ascending-degree lists of "a/b" strings; the zero
// polynomial is [].
Json to_json(const QPoly& p);
Json to_json(const RationalFunction& f);
// {"rat": {"num": [...], "den": [...]}, "log": {...}}
Json to_json(const LogScalar& a);

QPoly qpoly_from_json(const Json& j);
RationalFunction rational_function_from_json(const Json& j);
LogScalar log_scalar_from_json(const Json& j);

} // namespace qzeta

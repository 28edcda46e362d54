#pragma once

#include <string>

#include <json.hpp>

#include "okubo/matrix.hpp"
#include "okubo/poly.hpp"
#include "okubo/rational.hpp"

namespace okubo {

using json = nlohmann::json;

json to_json(const Rational& r);
json to_json(const RationalMatrix& m);
json to_json(const RationalVector& v);
/// Coefficient array, lowest degree first.
json to_json(const Poly& p);
json to_json(const PolyMatrix& m);

/// Decimal string with 17 significant digits.
std::string format_double(double x);

/// Accepts a "p/q" string or an integer literal. Throws Error(invalid_input).
Rational rational_from_json(const json& j);
RationalMatrix matrix_from_json(const json& j);
Poly poly_from_json(const json& j);

}  // namespace okubo

#pragma once

// JSON encoding of values, polynomials and sampled paths. Numbers are
// written with 17 significant digits so every finite double round-trips.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pnc/planar_nc.hpp"
#include "pnc/polynomial.hpp"

namespace pnc::json_io {

/// Keys keep insertion order so output lists "n" before "coeffs".
using json = nlohmann::ordered_json;

/// {"n": <even int>, "coeffs": [x0, ..., x_{n-1}]}. Throws InvalidArgument
/// on malformed input.
PlanarNC value_from_json(const json& j);
json value_to_json(const PlanarNC& u);

/// {"n": ..., "coeffs": [a_1, ..., a_m]} where each a_l is a value object or
/// a bare coefficient array.
NPolynomial poly_from_json(const json& j);

/// A JSON array of values.
std::vector<PlanarNC> path_from_json(const json& j);

/// Parses text, mapping syntax errors to InvalidArgument.
json parse(const std::string& text);

/// 17 significant digits with '.' as the decimal separator regardless of
/// locale; "null" for non-finite values.
std::string format_double(double x);

/// Serializes with format_double for every floating-point number. indent < 0
/// gives the compact form.
std::string dump(const json& j, int indent = -1);

}  // namespace pnc::json_io

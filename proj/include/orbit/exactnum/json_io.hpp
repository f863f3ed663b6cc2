#pragma once

#include "orbit/exactnum/gauss.hpp"
#include "orbit/exactnum/matrix.hpp"

#include <json.hpp>

namespace orbit {

using Json = nlohmann::json;

/// Rationals serialize as "p/q" strings; Gaussian rationals as
/// {"re": "p/q", "im": "p/q"}.
Json to_json(Rational const &r);
Json to_json(GaussRational const &z);
Json to_json(ExactVector const &v);
Json to_json(ExactMatrix const &m);

/// Accepts a "p/q" string or an integer number.
Rational rational_from_json(Json const &j);
/// Accepts {"re":…, "im":…} or anything rational_from_json accepts.
GaussRational gauss_from_json(Json const &j);

} // namespace orbit

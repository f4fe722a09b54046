#pragma once

#include "coha/quiver.hpp"
#include "coha/ratpoly.hpp"
#include "coha/series.hpp"
#include "coha/sstquot.hpp"

#include <json.hpp>

#include <string>

namespace coha {

using json = nlohmann::ordered_json;

json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

/// {"dim": {"0": 1, "inf": 1}, "terms": [{"exp": {"0,1": 2}, "coeff": "3/2"}]}
/// Vertex names resolve against the quiver; slots are 1-based.
json poly_to_json(const RatPoly& p, const Quiver& q);
RatPoly poly_from_json(const json& j, const Quiver& q);

json quot_class_to_json(QuotientAlgebra& alg, const QuotClass& c);

json series_to_json(const QtSeries& s);
QtSeries series_from_json(const json& j);

} // namespace coha

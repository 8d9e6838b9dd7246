#pragma once

#include <json.hpp>

#include "gkz/basis.hpp"
#include "gkz/fan.hpp"
#include "gkz/gkzsys.hpp"
#include "gkz/series.hpp"

namespace gkz {

using json = nlohmann::json;

// Serialization conventions: complex numbers as [re, im] pairs, exact
// rationals as "p/q" strings, integer matrices as row-major arrays.
json complex_json(cplx v);
cplx complex_from_json(const json& j);

json rational_json(const Rat& r);
Rat rational_from_json(const json& j);
RatVec ratvec_from_json(const json& j);
json ratvec_json(const RatVec& v);

json intmatrix_json(const IntMatrix& m);
IntMatrix intmatrix_from_json(const json& j);

// Parameter entries: "p/q" strings and integers parse exactly; [re, im]
// pairs and floating numbers go through the inexact complex path.
Parameter parameter_from_json(const json& j);
json parameter_json(const Parameter& p);

json simplex_json(const SimplexData& sd);
json triangulation_json(const TriangulationData& T);
json series_value_json(const std::vector<long>& sigma, const IntVec& k,
                       const std::vector<cplx>& exponent, const SeriesValue& v);
json tmatrix_json(const TransformMatrix& T);

}  // namespace gkz

#pragma once

#include "json.hpp"

#include "coxaff/affine.hpp"
#include "coxaff/geometry.hpp"
#include "coxaff/pointarray.hpp"

namespace coxaff {

using Json = nlohmann::ordered_json;

// {"a":"p/q","b":"r/s"}; parsers also accept the shorthand string form
Json golden_to_json(const Golden& g);
Golden golden_from_json(const Json& j);

Json vec_to_json(const GVec& v);
GVec vec_from_json(const Json& j);

Json matrix_to_json(const GMatrix& m);
GMatrix matrix_from_json(const Json& j);

Json extended_to_json(const ExtendedCartan& ext);
Json operator_to_json(const AffineOperator& op);
Json km_report_to_json(const KmRuleReport& rep);
Json consistency_to_json(const ConsistencyReport& rep);
Json symmetrize_to_json(const SymmetrizeResult& res);
Json quadruplet_to_json(const Quadruplet& q);
Json orbit_to_json(const SolutionOrbit& orb);
Json length_class_to_json(const LengthClass& lc);
Json array_to_json(const PointArray& arr);

// point arrays as CSV (one exact point per row) and, for H2, as SVG
std::string array_to_csv(const PointArray& arr);
std::string roots_to_csv(const std::vector<GVec>& roots);
std::string array_to_svg(const PointArray& arr);

}  // namespace coxaff

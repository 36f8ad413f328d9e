#pragma once

#include <json.hpp>

#include "kinekit/lie_algebra.hpp"

namespace kinekit {

using Json = nlohmann::ordered_json;

// Interchange format:
// {"generators":[{"name":"K1","dim":[l,t,m]},...],
//  "brackets":[{"i":0,"j":1,"k":6,"num":1,"den":1,"params":{"kappa":2}}],
//  "param_values":{"omega":[2,1]}}
// Indices are 0-based into the generator list; one bracket record per
// monomial, records with equal (i,j,k) accumulate.
Json algebra_to_json(const LieAlgebra& alg);
LieAlgebra algebra_from_json(const Json& j, JacobiPolicy policy = JacobiPolicy::Strict);

Json rat_to_json(const Rat& r);    // [num, den]
Rat rat_from_json(const Json& j);  // [num, den] | integer | "p/q"

Json poly_to_json(const ParamPoly& p);

}  // namespace kinekit

#pragma once

#include <vector>

#include "kinekit/rational.hpp"

namespace kinekit {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

RatMat rat_identity(int n);
RatMat rat_mul(const RatMat& a, const RatMat& b);
RatVec rat_mul_vec(const RatMat& a, const RatVec& x);
RatMat rat_transpose(const RatMat& a);

int rat_rank(RatMat a);

/// Basis of the right nullspace of a (rows x cols), as column vectors.
std::vector<RatVec> rat_nullspace(RatMat a);

/// Gauss-Jordan inverse; throws std::domain_error naming the rank when singular.
RatMat rat_inverse(RatMat a);

/// Least-norm style exact solve of a x = b via elimination; returns nullopt-like
/// empty vector when inconsistent.
bool rat_solve(RatMat a, RatVec b, RatVec& x);

/// True when v lies in the column span of basis (exact membership).
bool rat_in_span(const std::vector<RatVec>& basis, const RatVec& v);

}  // namespace kinekit

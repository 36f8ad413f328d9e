#pragma once

#include <optional>

#include "kinekit/lie_algebra.hpp"

namespace kinekit {

/// Normalized classification parameters of a planar kinematical algebra:
/// lambda in {0,1}, gamma in {0, 1/c^2}, beta in {-omega^2, 0, +omega^2}.
/// The derived alpha = beta*gamma and mu = -lambda*gamma are always recomputed.
struct KinematicalParams {
  int lambda = 1;          // 0 or 1
  bool gamma_inv_c2 = false;  // gamma = 1/c^2 when true, 0 otherwise
  int beta_sign = 0;       // -1, 0, +1 (times omega^2)

  bool operator==(const KinematicalParams& o) const {
    return lambda == o.lambda && gamma_inv_c2 == o.gamma_inv_c2 && beta_sign == o.beta_sign;
  }
};

struct SpacetimeAttributes {
  bool absolute_time = false;
  bool absolute_space = false;
  bool cosmological = false;  // false = local
};

struct CatalogEntry {
  std::string name;  // dS+, P, dS-, NH+, G, NH-, P'+, C, P'-, G'+, G'-, St
  KinematicalParams params;
  LieAlgebra algebra;                   // order J, K1, K2, P1, P2, H
  std::optional<LieAlgebra> anisotropic;  // order K1, K2, P1, P2, H
  SpacetimeAttributes attributes;
};

/// All 12 catalog names in canonical order.
const std::vector<std::string>& catalog_names();

/// Builds the algebra for one (lambda, gamma, beta) triple. The coefficients
/// are exact monomials in omega and kappa, with 1/c^2 written as kappa^2/omega^2.
CatalogEntry build_kinematical(const KinematicalParams& p);

CatalogEntry catalog_entry(const std::string& name);

struct ClassifyResult {
  std::string name;
  KinematicalParams params;
  SpacetimeAttributes attributes;
};

/// Exact-match classification of a 6-generator algebra in canonical order
/// (or a 5-generator rotationless one against the reduced tables).
/// Throws std::domain_error naming the first mismatching bracket.
ClassifyResult classify(const LieAlgebra& alg);

/// Drops the rotation generator. Throws std::domain_error when J appears on
/// the right-hand side of a [K,K] or [P,P] bracket.
LieAlgebra anisotropic_reduce(const CatalogEntry& entry);

enum class ContractionKind { VelocitySpace, VelocityTime, SpaceTime };

/// Weight assignment of a named contraction on the 6-generator basis.
std::map<std::string, int> contraction_weights(ContractionKind kind);

/// name -> contracted name, one row of the contraction table.
std::string contraction_target(const std::string& name, ContractionKind kind);

}  // namespace kinekit

#pragma once

#include <optional>

#include "kinekit/exact_linalg.hpp"
#include "kinekit/lie_algebra.hpp"

namespace kinekit {

/// Antisymmetric extension-valued 2-cochain: values d^alpha_ij stored for i<j.
struct TwoCochain {
  int base_dim = 0;
  int ext_dim = 0;
  std::map<std::pair<int, int>, RatVec> values;  // (i<j) -> coefficients over ext gens

  RatVec get(int i, int j) const;
  void set(int i, int j, RatVec v);
};

/// Action tensor C^s_{i,beta}: base generator i acting on extension generator
/// beta, valued in the extension. Identically zero for central extensions.
struct ExtensionAction {
  int base_dim = 0;
  int ext_dim = 0;
  std::map<std::pair<int, int>, RatVec> entries;  // (i, beta) -> coefficients

  RatVec get(int i, int beta) const;
  void set(int i, int beta, RatVec v);
  bool is_zero() const { return entries.empty(); }
};

struct ExtensionProblem {
  LieAlgebra base;
  std::vector<GeneratorMeta> ext_generators;
  ExtensionAction action;
};

struct ExtensionResult {
  std::vector<TwoCochain> z2_basis;
  std::vector<TwoCochain> b2_basis;
  int h2_dim = 0;
  std::optional<LieAlgebra> extended;
  // Equivariant runs only: number of independent extension generators after
  // grouping cocycles by their parity/time-reversal signature.
  std::optional<int> generator_count;
};

/// Closure + skewness solver for central extensions. With equivariant=true the
/// ansatz is restricted to delta/epsilon-built cochains on the (K,P) pairs of a
/// rotationless kinematical base, and cocycles are grouped by their behaviour
/// under parity and time reversal.
ExtensionResult solve_central(const ExtensionProblem& problem, bool equivariant = false);

/// Abelian extensions with a nontrivial (given) action: solves the twisted
/// closure system for the cochain, validating the action consistency equations.
ExtensionResult solve_noncentral(const ExtensionProblem& problem);

/// Base + extension assembled into one algebra (strict Jacobi check).
LieAlgebra assemble_extension(const ExtensionProblem& problem, const TwoCochain& cochain);

/// Coboundary of a 1-cochain beta: (d beta)(Xi,Xj) = rho(Xi)beta(Xj)
/// - rho(Xj)beta(Xi) + beta([Xi,Xj]). beta is ext_dim x base_dim.
TwoCochain coboundary1(const ExtensionProblem& problem, const RatMat& beta);

/// Coboundary of a 2-cochain (a 3-cochain), used by the d^2 = 0 property test.
/// Returned as values over (i<j<k) triples.
std::map<std::tuple<int, int, int>, RatVec> coboundary2(const ExtensionProblem& problem,
                                                        const TwoCochain& c);

/// Exact membership of a cochain in the span of a basis.
bool cochain_in_span(const std::vector<TwoCochain>& basis, const TwoCochain& c);

/// Constraint family tying the boost-boost and momentum-momentum extension
/// coefficients for given (lambda, beta sign).
struct ParamRelationFamily {
  bool mu_free = false;
  bool alpha_free = false;
  bool mu_zero = false;
  bool alpha_zero = false;
  Rat mu_over_alpha{0};  // meaningful when neither free nor zero
  std::string description;
};

ParamRelationFamily relation_family(int lambda, int beta_sign);

/// Validates a concrete (mu, alpha) pair against the family; throws
/// std::invalid_argument on inconsistent inputs.
ParamRelationFamily check_parameter_relation(const Rat& mu, const Rat& alpha, int lambda,
                                             int beta_sign);

/// Named extended algebras with documented canonical generator order.
/// Names: anisoNH+ anisoNH- anisoG anisoG'+ anisoG'- anisoSt anisoC
///        aristotleCentral aristotleNoncentral ncGalilei ncNH+ ncNH-
///        ncParaGalilei+ ncParaGalilei- ncStatic NH1D+ NH1D- NH3D+ NH3D-
LieAlgebra build_extended_catalog(const std::string& name);

const std::vector<std::string>& extended_catalog_names();

/// The extension problem (base, ext generators, action) whose solution space
/// contains the catalog algebra, plus the catalog cochain itself.
std::pair<ExtensionProblem, TwoCochain> extension_problem_for(const std::string& name);

}  // namespace kinekit

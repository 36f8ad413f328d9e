#pragma once

#include "kinekit/kirillov.hpp"

namespace kinekit {

/// Polynomial invariant candidate on a dual space. The polynomial mixes the
/// nontrivial coordinates (degree <= 2) with the central ones and the physical
/// parameters, which play the role of coefficients.
struct InvariantSpec {
  std::string name;
  ParamPoly polynomial;
};

/// Closed-form invariants per extended catalog name, each verified exactly by
/// casimir_residual_sym (see the accompanying tests).
std::vector<InvariantSpec> invariant_library(const std::string& extended_name);

/// Labels of the central coordinates (zero rows of the Kirillov matrix at a
/// generic point).
std::vector<std::string> trivial_coordinates(const LieAlgebra& alg);

struct NumericInvariant {
  std::vector<Powers> monomials;  // over nontrivial coordinate labels
  std::vector<double> coefficients;
  double residual = 0.0;  // max residual over fresh points
};

struct CasimirSearch {
  std::vector<NumericInvariant> basis;
  int solution_dim = 0;
  bool stable = true;  // dimension agreed across resamples
};

/// Least-squares fit of degree <= `degree` polynomial invariants of K grad f = 0,
/// sampling the nontrivial coordinates around `reference` (central coordinates
/// stay frozen at the reference values, playing the role of parameters).
/// Constants are excluded from the reported basis; the frozen central
/// coordinates are the trivial linear invariants and come for free.
CasimirSearch find_casimirs(const LieAlgebra& alg, const DualPoint& reference, int degree,
                            const std::vector<int>& trivial_idx, unsigned seed = 17);

/// Least-squares membership: residual of projecting `inv` (with central
/// coordinates frozen at `reference`) onto span(search basis + constants).
double casimir_fit_residual(const LieAlgebra& alg, const CasimirSearch& search,
                            const InvariantSpec& inv, const DualPoint& reference,
                            const std::vector<int>& trivial_idx);

/// A generic rational reference point for a catalog dual space (all invariants
/// nonvanishing, restrictions invertible).
DualPoint generic_point(const LieAlgebra& alg, unsigned seed = 5);

}  // namespace kinekit

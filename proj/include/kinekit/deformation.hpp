#pragma once

#include "kinekit/nc_mechanics.hpp"
#include "kinekit/polynomial.hpp"

namespace kinekit {

/// Linear deformation data for the bracket ansatz
///   {p_i,p_j} = a_ijk q^k + alpha_ij,  {q^i,q^j} = b^kij p_k + beta^ij,
///   {p_j,q^i} = delta^i_j,  {E,p_i} = w_ik q^k,  {E,q^i} = r^ki p_k.
/// In the planar shorthand alpha = n eps, beta = d eps, a_ijk = a_k eps_ij,
/// b^kij = b^k eps^ij.
struct LinearAnsatz {
  int n = 2;
  bool planar_shorthand = true;  // use (a_k, b^k, n, d) scalars in the plane
  // Entries are symbols so the constraint report stays exact.
};

struct ConstraintReport {
  std::vector<std::string> forced_zero;          // tensor families forced to vanish
  std::vector<std::string> symmetry;             // matrices forced symmetric
  std::vector<ParamPoly> relations;              // residual relations among survivors
  std::vector<ParamPoly> raw_equations;          // every coefficient equation collected
  bool reduced_jacobi_ok = false;                // substituted-back identities vanish
};

/// Expands all Jacobi identities among {p_i, q^i, E} symbolically and reduces:
/// a = 0, b = 0, W and R symmetric, and (planar) d w_kl = n eps_ki eps_jl r^ij,
/// or, with R = delta/m and W = w delta in general dimension, alpha = m w beta.
ConstraintReport jacobi_constraints(const LinearAnsatz& ansatz);

struct CaseClassification {
  std::string case_label;  // "I".."V"
  std::string group;
  NCPhaseSpace phase_space;
  Eigen::MatrixXd motion_matrix;  // d/dt (q,p) = A (q,p)
};

/// Five-way classification of the reduced planar ansatz (n, d, w), with the
/// dictionary n = eB, d = e*B*, w = +-m omega^2 and R = delta/m.
/// Throws std::domain_error when the inputs violate the closure relations.
CaseClassification classify_case(const Rat& n_scalar, const Rat& d_scalar, const Rat& w,
                                 const Rat& m = Rat(1));

}  // namespace kinekit

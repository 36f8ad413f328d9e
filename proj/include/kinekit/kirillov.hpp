#pragma once

#include "kinekit/exact_linalg.hpp"
#include "kinekit/lie_algebra.hpp"

namespace kinekit {

/// Dual coordinate label of a generator: H -> E, S -> h, M -> m, Mp -> mu,
/// B -> beta, Lam -> k, J -> j, J1..J3 -> h1..h3, otherwise lowercased name.
std::string dual_label(const std::string& generator_name);

/// Point on the dual of an algebra; label order equals generator order.
struct DualPoint {
  std::vector<std::string> labels;
  std::vector<Rat> values;

  static DualPoint zero(const LieAlgebra& alg);
  Rat get(const std::string& label) const;
  void set(const std::string& label, const Rat& v);
  std::map<std::string, Rat> as_map() const;
};

/// Symbolic Kirillov matrix: K_ij = sum_k C^k_ij a_k with a_k the dual
/// coordinate symbols. Sign convention matches the displayed matrices; the
/// coordinate bracket is then {f,g} = K_ij dg/da_i df/da_j.
std::vector<std::vector<ParamPoly>> kirillov_matrix_sym(const LieAlgebra& alg);

/// Kirillov matrix evaluated at a rational point (parameters resolved).
RatMat kirillov_matrix(const LieAlgebra& alg, const DualPoint& a);

/// Lie-Poisson bracket of two polynomials in the dual coordinates, evaluated
/// at a point. Orientation fixed so that {p_i, q^j} = +delta on the charts.
Rat lie_poisson_bracket(const LieAlgebra& alg, const ParamPoly& f, const ParamPoly& g,
                        const DualPoint& a);

/// Fully symbolic bracket (polynomial in coordinates and parameters).
ParamPoly lie_poisson_bracket_sym(const LieAlgebra& alg, const ParamPoly& f, const ParamPoly& g);

/// K(a) . grad inv (a); identically zero iff inv is invariant near a.
RatVec casimir_residual(const LieAlgebra& alg, const ParamPoly& inv, const DualPoint& a);

/// Symbolic residual vector; exact zero test for invariants.
std::vector<ParamPoly> casimir_residual_sym(const LieAlgebra& alg, const ParamPoly& inv);

/// Orbit chart: a coordinate subset with the restricted Kirillov matrix and
/// its exact inverse (the symplectic 2-form is sigma = 1/2 Theta_ab dz_a^dz_b).
struct OrbitChart {
  std::vector<int> indices;
  std::vector<std::string> labels;
  RatMat omega;  // restricted Kirillov matrix at the point
  RatMat theta;  // omega^{-1}
};

/// Restricts K(a) to the chart rows/columns and inverts exactly.
/// Throws std::domain_error naming the rank when the restriction is singular.
OrbitChart restrict_and_invert(const LieAlgebra& alg, const DualPoint& a,
                               const std::vector<int>& chart);

OrbitChart restrict_and_invert(const LieAlgebra& alg, const DualPoint& a,
                               const std::vector<std::string>& chart_labels);

/// Chart after an invertible linear relabeling z' = L z (e.g. q = k/m):
/// omega' = L omega L^T is the bracket matrix of the new coordinates,
/// theta' = L^{-T} theta L^{-1} carries the 2-form coefficients.
OrbitChart relabel_chart(const OrbitChart& chart, const RatMat& L,
                         const std::vector<std::string>& new_labels);

/// Default golden chart (coordinate labels) per extended catalog name.
std::vector<std::string> default_chart(const std::string& extended_name);

}  // namespace kinekit

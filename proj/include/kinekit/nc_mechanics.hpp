#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "kinekit/exact_linalg.hpp"

namespace kinekit {

/// Phase space with constant noncommutativity fields: {p_i,p_j} = F_ij,
/// {q^i,q^j} = G^ij, {p_i,q^j} = gamma delta^j_i.
struct NCPhaseSpace {
  int n = 2;
  RatMat F;  // n x n skew, momentum sector
  RatMat G;  // n x n skew, position sector
  Rat gamma_scale{1};

  static NCPhaseSpace canonical(int n);
  /// Planar fields F = -eB eps, G = -e*B* eps in the symmetric gauge.
  static NCPhaseSpace planar(const Rat& eB, const Rat& estarBstar, const Rat& gamma = Rat(1));
  void validate() const;  // skewness + invertible pairing I - FG/4
};

/// Minimal-coupling change of coordinates and its pushed-forward brackets:
///   pi_i = p_i - (1/2) F_ik q^k,   x^i = q^i + (1/2) G^ik p_k,
/// giving {pi,pi} = F, {x,x} = G, {pi_i,x^j} = (I - FG/4)_i^j exactly.
struct CouplingMapResult {
  RatVec pi, x;
  RatMat bracket_pipi, bracket_pix, bracket_xx;
};
CouplingMapResult coupling_map(const NCPhaseSpace& ps, const RatVec& p, const RatVec& q);

/// Quadratic + linear Hamiltonian H = p.R p/2 + q.W q/2 - eE.q - e*E*.p.
/// All data exact; dynamics evaluates to doubles.
struct HamiltonianModel {
  int n = 2;
  RatMat R;       // kinetic matrix
  RatMat W;       // stiffness matrix
  RatVec eE;      // electric drive (charge folded in)
  RatVec estarE;  // dual drive

  // Mixed-model constants (synchronized oscillators); zero when unused.
  Rat mass{0}, spring_mass{0}, compliance{0}, gamma{1}, reduced_mass{0}, total_mass{0};
};

struct ModelSetup {
  NCPhaseSpace ps;
  HamiltonianModel model;
};

ModelSetup charged_particle(const Rat& m, const Rat& e, const Rat& B, std::array<Rat, 2> E);
ModelSetup dual_spring(const Rat& C, const Rat& e_star, const Rat& B_star, std::array<Rat, 2> Estar);
/// Mixed coupling with synchronized frequencies: eB/2 = m omega, e*B*/2 = 1/(m_s omega).
ModelSetup pendulum(const Rat& m, const Rat& m_s, const Rat& omega, std::array<Rat, 2> E,
                    std::array<Rat, 2> Estar);
/// Orbit-chart models of the extended groups (anisoNH-, anisoNH+, ncGalilei,
/// ncParaGalilei+/-, ncStatic), with chart constants supplied as rationals.
ModelSetup group_model(const std::string& name, const std::map<std::string, Rat>& constants);

/// Generalized bracket of two differentiable functions of (p, q).
using PhaseFn = std::function<double(const Eigen::VectorXd& p, const Eigen::VectorXd& q)>;
double nc_bracket(const NCPhaseSpace& ps, const PhaseFn& f, const PhaseFn& g,
                  const Eigen::VectorXd& p, const Eigen::VectorXd& q, double fd_step = 1e-5);

/// Affine equations of motion d/dt (q,p) = A (q,p) + b:
///   dq/dt = gamma dH/dp + G dH/dq,   dp_k/dt = -gamma dH/dq^k + F_ik dH/dp_i.
struct LinearSystem {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
};
LinearSystem equations_of_motion(const NCPhaseSpace& ps, const HamiltonianModel& model);

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;  // (q, p) stacked
  std::vector<double> energies;
};

enum class Method { Exact, RK4 };

/// Exact matrix-exponential flow of the affine system, or fixed-step RK4.
Trajectory propagate(const NCPhaseSpace& ps, const HamiltonianModel& model,
                     const Eigen::VectorXd& state0, double t_end, Method method, double dt);

double hamiltonian_value(const HamiltonianModel& model, const Eigen::VectorXd& state);

/// Flow map Jacobian of the exact propagator at time t (matrix exponential).
Eigen::MatrixXd flow_jacobian(const NCPhaseSpace& ps, const HamiltonianModel& model, double t);

/// Poisson matrix of the chart in (q, p) order: [[G, gamma I], [-gamma I, F]].
Eigen::MatrixXd chart_poisson_matrix(const NCPhaseSpace& ps);

/// Max norm of m q'' - ( -dV0/dq^k + F_ik p^i/m + m G^ki d/dt dV0/dq^i )
/// along the trajectory (central differences); for kinetic-free models the
/// dual law C p'' - dual force is evaluated instead.
double newton_residual(const NCPhaseSpace& ps, const HamiltonianModel& model,
                       const Trajectory& traj);

}  // namespace kinekit

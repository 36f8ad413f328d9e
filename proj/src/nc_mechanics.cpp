#include "kinekit/nc_mechanics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <stdexcept>

namespace kinekit {

namespace {

RatMat rat_eps2(const Rat& scale) {
  return {{Rat(0), scale}, {-scale, Rat(0)}};
}

RatMat rat_zero(int n) { return RatMat(n, RatVec(n, Rat(0))); }

RatMat rat_scaled_identity(int n, const Rat& s) {
  RatMat m = rat_zero(n);
  for (int i = 0; i < n; ++i) m[i][i] = s;
  return m;
}

Eigen::MatrixXd to_eigen(const RatMat& m) {
  Eigen::MatrixXd out(m.size(), m.empty() ? 0 : m[0].size());
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) out(i, j) = to_double(m[i][j]);
  return out;
}

Eigen::VectorXd to_eigen(const RatVec& v) {
  Eigen::VectorXd out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out(i) = to_double(v[i]);
  return out;
}

}  // namespace

NCPhaseSpace NCPhaseSpace::canonical(int n) {
  NCPhaseSpace ps;
  ps.n = n;
  ps.F = rat_zero(n);
  ps.G = rat_zero(n);
  return ps;
}

NCPhaseSpace NCPhaseSpace::planar(const Rat& eB, const Rat& estarBstar, const Rat& gamma) {
  NCPhaseSpace ps;
  ps.n = 2;
  ps.F = rat_eps2(-eB);
  ps.G = rat_eps2(-estarBstar);
  ps.gamma_scale = gamma;
  ps.validate();
  return ps;
}

void NCPhaseSpace::validate() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (F[i][j] != -F[j][i] || G[i][j] != -G[j][i])
        throw std::invalid_argument("NCPhaseSpace: F and G must be skew");
  // Pairing I - FG/4 must be invertible for the coupling map to be a change
  // of coordinates.
  RatMat pairing = rat_scaled_identity(n, Rat(1));
  RatMat fg = rat_mul(F, G);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pairing[i][j] -= fg[i][j] / 4;
  rat_inverse(pairing);  // throws std::domain_error when singular
}

CouplingMapResult coupling_map(const NCPhaseSpace& ps, const RatVec& p, const RatVec& q) {
  const int n = ps.n;
  if (static_cast<int>(p.size()) != n || static_cast<int>(q.size()) != n)
    throw std::invalid_argument("coupling_map: vector length mismatch");
  ps.validate();
  CouplingMapResult out;
  out.pi.assign(n, Rat(0));
  out.x.assign(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    out.pi[i] = p[i];
    out.x[i] = q[i];
    for (int k = 0; k < n; ++k) {
      out.pi[i] -= ps.F[i][k] * q[k] / 2;
      out.x[i] += ps.G[i][k] * p[k] / 2;
    }
  }
  // Push the canonical brackets {p_i,q^j} = delta through the Jacobian
  // M = [[I, -F/2],[G/2, I]] (rows pi then x): P' = M P M^T.
  RatMat M(2 * n, RatVec(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    M[i][i] = 1;
    M[n + i][n + i] = 1;
    for (int j = 0; j < n; ++j) {
      M[i][n + j] = -ps.F[i][j] / 2;
      M[n + i][j] = ps.G[i][j] / 2;
    }
  }
  RatMat P(2 * n, RatVec(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    P[i][n + i] = 1;   // {p_i, q^i} = +1
    P[n + i][i] = -1;
  }
  RatMat Pn = rat_mul(rat_mul(M, P), rat_transpose(M));
  out.bracket_pipi.assign(n, RatVec(n));
  out.bracket_pix.assign(n, RatVec(n));
  out.bracket_xx.assign(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out.bracket_pipi[i][j] = Pn[i][j];
      out.bracket_pix[i][j] = Pn[i][n + j];
      out.bracket_xx[i][j] = Pn[n + i][n + j];
    }
  return out;
}

ModelSetup charged_particle(const Rat& m, const Rat& e, const Rat& B, std::array<Rat, 2> E) {
  ModelSetup s;
  s.ps = NCPhaseSpace::planar(e * B, Rat(0));
  s.model.n = 2;
  s.model.R = rat_scaled_identity(2, Rat(1) / m);
  s.model.W = rat_zero(2);
  s.model.eE = {e * E[0], e * E[1]};
  s.model.estarE = {Rat(0), Rat(0)};
  s.model.mass = m;
  return s;
}

ModelSetup dual_spring(const Rat& C, const Rat& e_star, const Rat& B_star, std::array<Rat, 2> Estar) {
  ModelSetup s;
  s.ps = NCPhaseSpace::planar(Rat(0), e_star * B_star);
  s.model.n = 2;
  s.model.R = rat_zero(2);
  s.model.W = rat_scaled_identity(2, Rat(1) / C);
  s.model.eE = {Rat(0), Rat(0)};
  s.model.estarE = {e_star * Estar[0], e_star * Estar[1]};
  s.model.compliance = C;
  s.model.spring_mass = 4 * C / (e_star * B_star * e_star * B_star);
  return s;
}

ModelSetup pendulum(const Rat& m, const Rat& m_s, const Rat& omega, std::array<Rat, 2> E,
                    std::array<Rat, 2> Estar) {
  ModelSetup s;
  Rat eB = 2 * m * omega;
  Rat estarB = Rat(2) / (m_s * omega);
  Rat gamma = 1 + m / m_s;
  s.ps = NCPhaseSpace::planar(eB, estarB, gamma);
  s.model.n = 2;
  Rat C = Rat(1) / (m_s * omega * omega);
  s.model.R = rat_scaled_identity(2, Rat(1) / m);
  s.model.W = rat_scaled_identity(2, Rat(1) / C);
  s.model.eE = {E[0], E[1]};
  s.model.estarE = {Estar[0], Estar[1]};
  s.model.mass = m;
  s.model.spring_mass = m_s;
  s.model.compliance = C;
  s.model.gamma = gamma;
  s.model.reduced_mass = m * m_s / (m + m_s);
  s.model.total_mass = m + m_s;
  return s;
}

ModelSetup group_model(const std::string& name, const std::map<std::string, Rat>& c) {
  auto get = [&](const std::string& k, Rat dflt) {
    auto it = c.find(k);
    return it == c.end() ? dflt : it->second;
  };
  Rat m = get("m", Rat(1));
  Rat omega = get("omega", Rat(1));
  Rat kappa = get("kappa", Rat(1));
  Rat h = get("h", Rat(0));
  ModelSetup s;
  if (name == "anisoNH-" || name == "anisoNH+") {
    // One-dimensional oscillating / expanding chart: H = p^2/2m +- m w^2 q^2/2.
    Rat sign = (name.back() == '-') ? Rat(1) : Rat(-1);
    s.ps = NCPhaseSpace::canonical(1);
    s.model.n = 1;
    s.model.R = {{Rat(1) / m}};
    s.model.W = {{sign * m * omega * omega}};
    s.model.eE = {Rat(0)};
    s.model.estarE = {Rat(0)};
    s.model.mass = m;
    return s;
  }
  if (name == "ncGalilei") {
    // Constant-force chart with position noncommutativity; the drive terms
    // cancel the dual-field drift so qdot = p/m exactly.
    Rat f1 = get("f1", Rat(1)), f2 = get("f2", Rat(0));
    Rat estarB = h * kappa * kappa / (m * m * omega * omega);
    s.ps = NCPhaseSpace::planar(Rat(0), estarB);
    s.model.n = 2;
    s.model.R = rat_scaled_identity(2, Rat(1) / m);
    s.model.W = rat_zero(2);
    s.model.eE = {f1, f2};
    // Dual drive tuned so the dual-field drift cancels: qdot = p/m exactly.
    s.model.estarE = {estarB * f2, -estarB * f1};
    s.model.mass = m;
    return s;
  }
  if (name == "anisoG'+" || name == "anisoG'-") {
    // Rotationless momentum-noncommutative oscillator: H = p^2/2m + sign m w^2 q^2/2
    // in the field F = -eB eps with eB = sign m w (frequency identification w0 = w).
    Rat sign = (name.back() == '+') ? Rat(1) : Rat(-1);
    s.ps = NCPhaseSpace::planar(sign * m * omega, Rat(0));
    s.model.n = 2;
    s.model.R = rat_scaled_identity(2, Rat(1) / m);
    s.model.W = rat_scaled_identity(2, sign * m * omega * omega);
    s.model.eE = {Rat(0), Rat(0)};
    s.model.estarE = {Rat(0), Rat(0)};
    s.model.mass = m;
    return s;
  }
  if (name == "ncParaGalilei+" || name == "ncParaGalilei-") {
    // Evolving pair (q, p) with constant transport momentum pi; here the chart
    // freezes pi into the drive: dq/dt = pi/m, dp/dt = q/C.
    Rat sign = (name.back() == '+') ? Rat(1) : Rat(-1);
    Rat pi1 = get("pi1", Rat(1)), pi2 = get("pi2", Rat(0));
    Rat invC = sign * m * omega * omega;
    s.ps = NCPhaseSpace::canonical(2);
    s.model.n = 2;
    s.model.R = rat_zero(2);
    s.model.W = rat_scaled_identity(2, -invC);  // dp/dt = -W q = +q/C
    s.model.eE = {Rat(0), Rat(0)};
    s.model.estarE = {-pi1 / m, -pi2 / m};  // dq/dt = -e*E* = pi/m
    s.model.mass = m;
    return s;
  }
  if (name == "ncStatic") {
    // Two frozen positions (q, u) driving two momenta (p, k).
    Rat mu = get("mu", Rat(1)), beta = get("beta", Rat(0)), kh = get("k", Rat(1));
    Rat ke = kh - beta * beta / mu;
    Rat mue = mu - beta * beta / kh;
    s.ps = NCPhaseSpace::canonical(2);
    s.model.n = 2;
    s.model.R = rat_zero(2);
    s.model.W = rat_zero(2);
    s.model.W = {{ke, Rat(0)}, {Rat(0), -mue}};  // dp/dt = -ke q, dk/dt = +mue u
    s.model.eE = {Rat(0), Rat(0)};
    s.model.estarE = {Rat(0), Rat(0)};
    s.model.mass = m;
    return s;
  }
  throw std::domain_error("group_model: unknown model " + name);
}

double nc_bracket(const NCPhaseSpace& ps, const PhaseFn& f, const PhaseFn& g,
                  const Eigen::VectorXd& p, const Eigen::VectorXd& q, double fd_step) {
  const int n = ps.n;
  auto grad = [&](const PhaseFn& fn, Eigen::VectorXd& dp, Eigen::VectorXd& dq) {
    dp.resize(n);
    dq.resize(n);
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd pp = p, pm = p;
      pp(i) += fd_step;
      pm(i) -= fd_step;
      dp(i) = (fn(pp, q) - fn(pm, q)) / (2 * fd_step);
      Eigen::VectorXd qp = q, qm = q;
      qp(i) += fd_step;
      qm(i) -= fd_step;
      dq(i) = (fn(p, qp) - fn(p, qm)) / (2 * fd_step);
    }
  };
  Eigen::VectorXd fp, fq, gp, gq;
  grad(f, fp, fq);
  grad(g, gp, gq);
  double gamma = to_double(ps.gamma_scale);
  double out = gamma * (fp.dot(gq) - fq.dot(gp));
  Eigen::MatrixXd F = to_eigen(ps.F), G = to_eigen(ps.G);
  out += fq.dot(G * gq) + fp.dot(F * gp);
  return out;
}

LinearSystem equations_of_motion(const NCPhaseSpace& ps, const HamiltonianModel& model) {
  const int n = ps.n;
  Eigen::MatrixXd R = to_eigen(model.R), W = to_eigen(model.W);
  Eigen::MatrixXd F = to_eigen(ps.F), G = to_eigen(ps.G);
  Eigen::VectorXd eE = to_eigen(model.eE), estarE = to_eigen(model.estarE);
  double gamma = to_double(ps.gamma_scale);
  LinearSystem sys;
  sys.A = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  sys.b = Eigen::VectorXd::Zero(2 * n);
  // dq/dt = gamma (R p - e*E*) + G (W q - eE)
  sys.A.topLeftCorner(n, n) = G * W;
  sys.A.topRightCorner(n, n) = gamma * R;
  sys.b.head(n) = -gamma * estarE - G * eE;
  // dp/dt = -gamma (W q - eE) - F (R p - e*E*)
  sys.A.bottomLeftCorner(n, n) = -gamma * W;
  sys.A.bottomRightCorner(n, n) = -F * R;
  sys.b.tail(n) = gamma * eE + F * estarE;
  return sys;
}

double hamiltonian_value(const HamiltonianModel& model, const Eigen::VectorXd& state) {
  const int n = model.n;
  Eigen::VectorXd q = state.head(n), p = state.tail(n);
  Eigen::MatrixXd R = to_eigen(model.R), W = to_eigen(model.W);
  return 0.5 * p.dot(R * p) + 0.5 * q.dot(W * q) - to_eigen(model.eE).dot(q) -
         to_eigen(model.estarE).dot(p);
}

Eigen::MatrixXd flow_jacobian(const NCPhaseSpace& ps, const HamiltonianModel& model, double t) {
  LinearSystem sys = equations_of_motion(ps, model);
  return (t * sys.A).exp();
}

Eigen::MatrixXd chart_poisson_matrix(const NCPhaseSpace& ps) {
  // Bivector generating the equations of motion in (q, p) order. The printed
  // momentum law uses the transposed-index field term F_ik dH/dp_i, which
  // lands here as -F; the position block carries G verbatim.
  const int n = ps.n;
  double gamma = to_double(ps.gamma_scale);
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  P.topLeftCorner(n, n) = to_eigen(ps.G);
  P.bottomRightCorner(n, n) = -to_eigen(ps.F);
  P.topRightCorner(n, n) = gamma * Eigen::MatrixXd::Identity(n, n);
  P.bottomLeftCorner(n, n) = -gamma * Eigen::MatrixXd::Identity(n, n);
  return P;
}

Trajectory propagate(const NCPhaseSpace& ps, const HamiltonianModel& model,
                     const Eigen::VectorXd& state0, double t_end, Method method, double dt) {
  if (dt <= 0) throw std::invalid_argument("propagate: dt must be positive");
  LinearSystem sys = equations_of_motion(ps, model);
  const int dim = static_cast<int>(state0.size());
  Trajectory traj;
  int steps = static_cast<int>(std::llround(t_end / dt));
  if (steps < 1) steps = 1;
  double step = t_end / steps;

  if (method == Method::Exact) {
    // Augmented flow handles the affine part for singular A as well.
    Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(dim + 1, dim + 1);
    aug.topLeftCorner(dim, dim) = sys.A;
    aug.topRightCorner(dim, 1) = sys.b;
    Eigen::MatrixXd step_flow = (step * aug).exp();
    Eigen::VectorXd z(dim + 1);
    z.head(dim) = state0;
    z(dim) = 1.0;
    for (int i = 0; i <= steps; ++i) {
      traj.times.push_back(i * step);
      traj.states.push_back(z.head(dim));
      traj.energies.push_back(hamiltonian_value(model, z.head(dim)));
      if (i < steps) z = step_flow * z;
    }
    return traj;
  }

  auto rhs = [&](const Eigen::VectorXd& y) { return (sys.A * y + sys.b).eval(); };
  Eigen::VectorXd y = state0;
  for (int i = 0; i <= steps; ++i) {
    traj.times.push_back(i * step);
    traj.states.push_back(y);
    traj.energies.push_back(hamiltonian_value(model, y));
    if (i < steps) {
      Eigen::VectorXd k1 = rhs(y);
      Eigen::VectorXd k2 = rhs(y + 0.5 * step * k1);
      Eigen::VectorXd k3 = rhs(y + 0.5 * step * k2);
      Eigen::VectorXd k4 = rhs(y + step * k3);
      y = y + (step / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4);
    }
  }
  return traj;
}

double newton_residual(const NCPhaseSpace& ps, const HamiltonianModel& model,
                       const Trajectory& traj) {
  const int n = model.n;
  if (traj.states.size() < 5) throw std::invalid_argument("newton_residual: trajectory too short");
  double dt = traj.times[1] - traj.times[0];
  Eigen::MatrixXd F = to_eigen(ps.F), G = to_eigen(ps.G);
  Eigen::MatrixXd W = to_eigen(model.W), R = to_eigen(model.R);
  Eigen::VectorXd eE = to_eigen(model.eE), estarE = to_eigen(model.estarE);

  bool kinetic = R.cwiseAbs().maxCoeff() > 0;
  double worst = 0;
  // Five-point central stencils keep the differencing error at O(dt^4).
  auto second = [&](auto part, size_t i) -> Eigen::VectorXd {
    return (-part(traj.states[i - 2]) + 16 * part(traj.states[i - 1]) - 30 * part(traj.states[i]) +
            16 * part(traj.states[i + 1]) - part(traj.states[i + 2])) /
           (12 * dt * dt);
  };
  auto first = [&](auto part, size_t i) -> Eigen::VectorXd {
    return (part(traj.states[i - 2]) - 8 * part(traj.states[i - 1]) +
            8 * part(traj.states[i + 1]) - part(traj.states[i + 2])) /
           (12 * dt);
  };
  for (size_t i = 2; i + 2 < traj.states.size(); ++i) {
    const Eigen::VectorXd& cur = traj.states[i];
    if (kinetic) {
      double m = 1.0 / R(0, 0);
      auto qpart = [&](const Eigen::VectorXd& st) { return st.head(n).eval(); };
      auto gVpart = [&](const Eigen::VectorXd& st) { return (W * st.head(n) - eE).eval(); };
      Eigen::VectorXd q2 = second(qpart, i);
      Eigen::VectorXd gVdot = first(gVpart, i);
      Eigen::VectorXd gV = W * cur.head(n) - eE;
      Eigen::VectorXd p = cur.tail(n);
      Eigen::VectorXd lhs = m * q2;
      // F_ik p^i / m enters with the transpose: (F^T p)/m = -(F p)/m.
      Eigen::VectorXd rhs = -gV - (F * p) / m + m * (G * gVdot);
      worst = std::max(worst, (lhs - rhs).lpNorm<Eigen::Infinity>());
    } else {
      // Dual law for kinetic-free models: C p'' = -dT0/dp - G q / C with
      // T0 = -e*E*.p, the velocity analogue of the Lorentz force.
      double C = 1.0 / W(0, 0);
      auto ppart = [&](const Eigen::VectorXd& st) { return st.tail(n).eval(); };
      Eigen::VectorXd p2 = second(ppart, i);
      Eigen::VectorXd gT = R * cur.tail(n) - estarE;
      Eigen::VectorXd q = cur.head(n);
      Eigen::VectorXd lhs = C * p2;
      Eigen::VectorXd rhs = -gT - (G * q) / C;
      worst = std::max(worst, (lhs - rhs).lpNorm<Eigen::Infinity>());
    }
  }
  return worst;
}

}  // namespace kinekit

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kinekit/coadjoint.hpp"
#include "kinekit/nc_mechanics.hpp"

using namespace kinekit;

namespace {

RatMat eps2(const Rat& s) { return {{Rat(0), s}, {-s, Rat(0)}}; }

Eigen::VectorXd vec4(double a, double b, double c, double d) {
  Eigen::VectorXd v(4);
  v << a, b, c, d;
  return v;
}

}  // namespace

TEST_CASE("coupling map pushforward: magnetic case") {
  // F = -eB eps, G = 0: {pi1, pi2} = -eB, pairing stays canonical.
  NCPhaseSpace ps = NCPhaseSpace::planar(Rat(5, 3), Rat(0));
  auto r = coupling_map(ps, {Rat(1), Rat(2)}, {Rat(3), Rat(4)});
  CHECK(r.bracket_pipi == eps2(Rat(-5, 3)));
  CHECK(r.bracket_xx == eps2(Rat(0)));
  CHECK(r.bracket_pix == rat_identity(2));
  // pi = p - F q / 2 = p + (eB/2) eps q.
  CHECK(r.pi[0] == Rat(1) + Rat(5, 6) * Rat(4));
  CHECK(r.pi[1] == Rat(2) - Rat(5, 6) * Rat(3));
  CHECK(r.x[0] == Rat(3));
}

TEST_CASE("coupling map pushforward: dual case") {
  NCPhaseSpace ps = NCPhaseSpace::planar(Rat(0), Rat(7, 2));
  auto r = coupling_map(ps, {Rat(1), Rat(0)}, {Rat(0), Rat(1)});
  CHECK(r.bracket_pipi == eps2(Rat(0)));
  CHECK(r.bracket_xx == eps2(Rat(-7, 2)));
  CHECK(r.bracket_pix == rat_identity(2));
}

TEST_CASE("coupling map: identity at zero fields") {
  NCPhaseSpace ps = NCPhaseSpace::canonical(2);
  auto r = coupling_map(ps, {Rat(1), Rat(2)}, {Rat(3), Rat(4)});
  CHECK(r.pi == RatVec{Rat(1), Rat(2)});
  CHECK(r.x == RatVec{Rat(3), Rat(4)});
  CHECK(r.bracket_pix == rat_identity(2));
}

TEST_CASE("mixed synchronized case produces the exact gamma pairing") {
  // eB/2 = m w, e*B*/2 = 1/(ms w): {pi, x} = (1 + m/ms) delta exactly.
  Rat m(3), ms(5), w(2);
  Rat eB = 2 * m * w, estarB = Rat(2) / (ms * w);
  NCPhaseSpace ps = NCPhaseSpace::planar(eB, estarB);
  auto r = coupling_map(ps, {Rat(1, 3), Rat(2)}, {Rat(-1), Rat(1, 2)});
  Rat gamma = 1 + m / ms;
  RatMat expect = {{gamma, Rat(0)}, {Rat(0), gamma}};
  CHECK(r.bracket_pix == expect);
  CHECK(r.bracket_pipi == eps2(-eB));
  CHECK(r.bracket_xx == eps2(-estarB));
}

TEST_CASE("singular pairing is rejected") {
  // FG/4 = I when eB e*B* = -4: pairing I - FG/4 singular... choose eB=2, e*B*=-2.
  NCPhaseSpace ps;
  ps.n = 2;
  ps.F = eps2(Rat(-2));
  ps.G = eps2(Rat(2));
  CHECK_THROWS_AS(ps.validate(), std::domain_error);
}

TEST_CASE("pendulum model identities hold exactly") {
  auto setup = pendulum(Rat(3), Rat(5), Rat(2), {Rat(0), Rat(0)}, {Rat(0), Rat(0)});
  const auto& mdl = setup.model;
  CHECK(mdl.mass == mdl.reduced_mass * mdl.gamma);
  CHECK(mdl.total_mass == mdl.spring_mass * mdl.gamma);
  CHECK(setup.ps.gamma_scale == Rat(8, 5));
  // 1/m_s = e*^2 B*^2 / (4C).
  Rat estarB = Rat(2) / (mdl.spring_mass * 2);
  CHECK(Rat(1) / mdl.spring_mass == estarB * estarB / (4 * mdl.compliance));
}

TEST_CASE("nc_bracket reproduces the field brackets pointwise") {
  NCPhaseSpace ps = NCPhaseSpace::planar(Rat(3, 2), Rat(-5, 4));
  Eigen::VectorXd p(2), q(2);
  p << 0.3, -0.7;
  q << 1.1, 0.2;
  auto coord = [](int which, int idx) {
    return [which, idx](const Eigen::VectorXd& pp, const Eigen::VectorXd& qq) {
      return which == 0 ? pp(idx) : qq(idx);
    };
  };
  CHECK(nc_bracket(ps, coord(0, 0), coord(0, 1), p, q) == doctest::Approx(-1.5).epsilon(1e-9));
  CHECK(nc_bracket(ps, coord(1, 0), coord(1, 1), p, q) == doctest::Approx(1.25).epsilon(1e-9));
  CHECK(nc_bracket(ps, coord(0, 0), coord(1, 0), p, q) == doctest::Approx(1.0).epsilon(1e-9));
  // {f,f} = 0.
  auto f = [](const Eigen::VectorXd& pp, const Eigen::VectorXd& qq) {
    return pp(0) * qq(1) + 0.5 * qq(0) * qq(0);
  };
  CHECK(nc_bracket(ps, f, f, p, q) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("Jacobi sum of the generalized bracket vanishes for constant fields") {
  NCPhaseSpace ps = NCPhaseSpace::planar(Rat(2, 3), Rat(1, 2));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  auto q1 = [](const Eigen::VectorXd& pp, const Eigen::VectorXd& qq) { return qq(0); };
  auto q2 = [](const Eigen::VectorXd& pp, const Eigen::VectorXd& qq) { return qq(1); };
  auto p1 = [](const Eigen::VectorXd& pp, const Eigen::VectorXd& qq) { return pp(0); };
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd p(2), q(2);
    p << u(rng), u(rng);
    q << u(rng), u(rng);
    // The inner brackets are constants, so each nested term vanishes and the
    // cyclic sum is numerically zero.
    auto inner_pq = [&](const Eigen::VectorXd& pp, const Eigen::VectorXd& qq) {
      return nc_bracket(ps, q2, p1, pp, qq);
    };
    double total = nc_bracket(ps, q1, inner_pq, p, q);
    auto inner2 = [&](const Eigen::VectorXd& pp, const Eigen::VectorXd& qq) {
      return nc_bracket(ps, p1, q1, pp, qq);
    };
    total += nc_bracket(ps, q2, inner2, p, q);
    auto inner3 = [&](const Eigen::VectorXd& pp, const Eigen::VectorXd& qq) {
      return nc_bracket(ps, q1, q2, pp, qq);
    };
    total += nc_bracket(ps, p1, inner3, p, q);
    CHECK(std::abs(total) < 1e-9);
  }
}

TEST_CASE("equations of motion: charged particle gives the velocity-cross force") {
  auto setup = charged_particle(Rat(1), Rat(1), Rat(1), {Rat(2), Rat(0)});
  LinearSystem sys = equations_of_motion(setup.ps, setup.model);
  // dq/dt = p/m: A[0..1][2..3] = I.
  CHECK(sys.A(0, 2) == doctest::Approx(1.0));
  CHECK(sys.A(1, 3) == doctest::Approx(1.0));
  // dp/dt = eE + eB eps p / m.
  CHECK(sys.b(2) == doctest::Approx(2.0));
  CHECK(sys.A(2, 3) == doctest::Approx(1.0));
  CHECK(sys.A(3, 2) == doctest::Approx(-1.0));
}

TEST_CASE("free particle: zero acceleration iff the momenta commute") {
  auto free_setup = charged_particle(Rat(2), Rat(0), Rat(0), {Rat(0), Rat(0)});
  LinearSystem sys = equations_of_motion(free_setup.ps, free_setup.model);
  CHECK(sys.A.bottomRows(2).norm() == doctest::Approx(0.0));
  CHECK(sys.b.norm() == doctest::Approx(0.0));
  auto mag = charged_particle(Rat(2), Rat(1), Rat(3), {Rat(0), Rat(0)});
  LinearSystem msys = equations_of_motion(mag.ps, mag.model);
  // dp/dt = F^T p / m => acceleration F^T p / m^2, nonzero.
  CHECK(msys.A.bottomRightCorner(2, 2).norm() > 0.1);
  Eigen::MatrixXd acc = msys.A.bottomRightCorner(2, 2) / 2.0;  // d2q/dt2 coefficient on p
  CHECK(acc(0, 1) == doctest::Approx(3.0 / 4.0));
}

TEST_CASE("dual spring: yank law in exact flow") {
  auto setup = dual_spring(Rat(1), Rat(1), Rat(2), {Rat(0), Rat(0)});
  Eigen::VectorXd s0 = vec4(1.0, 0.0, 0.0, 0.5);
  Trajectory traj = propagate(setup.ps, setup.model, s0, 2.0, Method::Exact, 1e-3);
  CHECK(newton_residual(setup.ps, setup.model, traj) < 1e-8);
}

TEST_CASE("cyclotron orbit: constant speed and exact radius") {
  auto setup = charged_particle(Rat(1), Rat(1), Rat(1), {Rat(0), Rat(0)});
  Eigen::VectorXd s0 = vec4(0.0, 0.0, 1.0, 0.0);  // unit momentum
  Trajectory traj = propagate(setup.ps, setup.model, s0, 10.0, Method::Exact, 0.01);
  // Speed |p| constant to 1e-12 and the orbit stays on a circle of radius |p|/eB = 1.
  double cx = 0.0, cy = -1.0;  // center from the initial velocity/field geometry
  for (size_t i = 0; i < traj.states.size(); ++i) {
    double speed = traj.states[i].tail(2).norm();
    CHECK(std::abs(speed - 1.0) < 1e-12);
  }
  // Find the actual center numerically from three points and check radius 1.
  auto q0 = traj.states.front().head(2), qm = traj.states[traj.states.size() / 3].head(2);
  double r0 = (q0 - Eigen::Vector2d(cx, cy)).norm();
  double rm = (qm - Eigen::Vector2d(cx, cy)).norm();
  CHECK(r0 == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(rm == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("energy conservation and drive power") {
  auto setup = charged_particle(Rat(1), Rat(1), Rat(2), {Rat(0), Rat(0)});
  Eigen::VectorXd s0 = vec4(0.3, -0.4, 0.7, 0.2);
  Trajectory traj = propagate(setup.ps, setup.model, s0, 10.0, Method::Exact, 0.01);
  for (double e : traj.energies) CHECK(std::abs(e - traj.energies[0]) < 1e-10);

  // With a linear drive the full H is still conserved and the quadratic part
  // changes at the drive power: dH0/dt = eE . qdot + e*E* . pdot.
  auto driven = charged_particle(Rat(1), Rat(1), Rat(2), {Rat(1), Rat(0)});
  Trajectory tr = propagate(driven.ps, driven.model, s0, 2.0, Method::Exact, 1e-3);
  for (double e : tr.energies) CHECK(std::abs(e - tr.energies[0]) < 1e-10);
  for (size_t i = 1; i + 1 < tr.states.size(); i += 97) {
    double dt = tr.times[1] - tr.times[0];
    auto quad = [&](const Eigen::VectorXd& st) {
      Eigen::VectorXd q = st.head(2), p = st.tail(2);
      return 0.5 * p.squaredNorm();  // R = I/m with m = 1, W = 0
    };
    double dH0 = (quad(tr.states[i + 1]) - quad(tr.states[i - 1])) / (2 * dt);
    Eigen::VectorXd qdot = (tr.states[i + 1].head(2) - tr.states[i - 1].head(2)) / (2 * dt);
    double power = 1.0 * qdot(0);  // eE = (1,0)
    CHECK(std::abs(dH0 - power) < 1e-8);
  }
}

TEST_CASE("exact propagator matches the closed-form oscillating evolution") {
  auto setup = group_model("anisoNH-", {{"m", Rat(1)}, {"omega", Rat(1)}});
  Eigen::VectorXd s0(2);
  s0 << 0.0, 1.0;  // (q, p)
  Trajectory traj = propagate(setup.ps, setup.model, s0, 10.0, Method::Exact, 0.01);
  Phys phys{1.0, 1.0};
  for (size_t i = 0; i < traj.states.size(); i += 50) {
    StateMap ev = time_evolve("NH1D-", {{"q", 0.0}, {"p", 1.0}, {"m", 1.0}}, traj.times[i], phys);
    CHECK(std::abs(traj.states[i](0) - ev.at("q")) < 1e-12);
    CHECK(std::abs(traj.states[i](1) - ev.at("p")) < 1e-12);
  }
  // Frozen closed form at t = 1: (q, p) = (sin 1, cos 1).
  Trajectory one = propagate(setup.ps, setup.model, s0, 1.0, Method::Exact, 0.5);
  CHECK(one.states.back()(0) == doctest::Approx(std::sin(1.0)).epsilon(1e-13));
  CHECK(one.states.back()(1) == doctest::Approx(std::cos(1.0)).epsilon(1e-13));
}

TEST_CASE("zero Hamiltonian leaves the state constant") {
  NCPhaseSpace ps = NCPhaseSpace::canonical(2);
  HamiltonianModel mdl;
  mdl.n = 2;
  mdl.R = RatMat(2, RatVec(2, Rat(0)));
  mdl.W = RatMat(2, RatVec(2, Rat(0)));
  mdl.eE = {Rat(0), Rat(0)};
  mdl.estarE = {Rat(0), Rat(0)};
  Eigen::VectorXd s0 = vec4(1, 2, 3, 4);
  Trajectory traj = propagate(ps, mdl, s0, 5.0, Method::Exact, 0.1);
  CHECK((traj.states.back() - s0).norm() == doctest::Approx(0.0));
}

TEST_CASE("RK4 shows fourth-order convergence against the exact flow") {
  auto setup = charged_particle(Rat(1), Rat(1), Rat(1), {Rat(1, 2), Rat(0)});
  Eigen::VectorXd s0 = vec4(0.1, -0.2, 0.8, 0.3);
  double t_end = 2.0;
  Trajectory exact = propagate(setup.ps, setup.model, s0, t_end, Method::Exact, t_end);
  auto err = [&](double dt) {
    Trajectory rk = propagate(setup.ps, setup.model, s0, t_end, Method::RK4, dt);
    return (rk.states.back() - exact.states.back()).norm();
  };
  double e1 = err(0.02), e2 = err(0.01);
  double ratio = e1 / e2;
  CHECK(ratio > 16.0 * 0.9);
  CHECK(ratio < 16.0 * 1.1);
}

TEST_CASE("exact propagator is a Poisson map for the chart structure") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  auto setup = pendulum(Rat(2), Rat(3), Rat(1), {Rat(0), Rat(0)}, {Rat(0), Rat(0)});
  Eigen::MatrixXd P = chart_poisson_matrix(setup.ps);
  for (int trial = 0; trial < 20; ++trial) {
    double t = u(rng);
    Eigen::MatrixXd M = flow_jacobian(setup.ps, setup.model, t);
    // M P M^T = P  <=>  M^T Omega M = Omega with Omega = P^{-1}.
    Eigen::MatrixXd diff = M * P * M.transpose() - P;
    CHECK(diff.lpNorm<Eigen::Infinity>() < 1e-10);
    Eigen::MatrixXd Om = P.inverse();
    Eigen::MatrixXd diff2 = M.transpose() * Om * M - Om;
    CHECK(diff2.lpNorm<Eigen::Infinity>() < 1e-10);
  }
}

TEST_CASE("modified law residuals for the three named models") {
  // Charged particle in a magnetic field with an electric drive.
  auto charged = charged_particle(Rat(1), Rat(1), Rat(1), {Rat(1), Rat(0)});
  Eigen::VectorXd s0 = vec4(0.0, 0.0, 1.0, 0.0);
  Trajectory t1 = propagate(charged.ps, charged.model, s0, 2.0, Method::Exact, 1e-3);
  CHECK(newton_residual(charged.ps, charged.model, t1) < 1e-8);

  // Free particle: a slightly coarser step keeps the exactly-linear motion
  // away from the second-difference cancellation floor.
  auto fr = charged_particle(Rat(1), Rat(0), Rat(0), {Rat(0), Rat(0)});
  Trajectory t2 = propagate(fr.ps, fr.model, s0, 2.0, Method::Exact, 2e-3);
  CHECK(newton_residual(fr.ps, fr.model, t2) < 1e-10);

  // Momentum-noncommutative oscillator family.
  auto pg = group_model("anisoG'+", {{"m", Rat(1)}, {"omega", Rat(1)}});
  Trajectory t3 = propagate(pg.ps, pg.model, s0, 2.0, Method::Exact, 1e-3);
  CHECK(newton_residual(pg.ps, pg.model, t3) < 1e-8);
}

TEST_CASE("pendulum model reproduces its stated motion pair") {
  // dx/dt = pi/mu - gamma e*E* + e*B* eps x / C - terms; checked against the
  // assembled system row by row for the synchronized constants.
  Rat m(1), ms(2), w(1);
  auto setup = pendulum(m, ms, w, {Rat(1, 2), Rat(0)}, {Rat(0), Rat(1, 3)});
  LinearSystem sys = equations_of_motion(setup.ps, setup.model);
  double gamma = to_double(setup.ps.gamma_scale);
  double mu = to_double(setup.model.reduced_mass);
  double C = to_double(setup.model.compliance);
  double estarB = to_double(Rat(2) / (ms * w));
  double eB = to_double(2 * m * w);
  // dq/dt rows: q-part = G W = -e*B* eps / C, p-part = gamma/m I.
  CHECK(sys.A(0, 1) == doctest::Approx(-estarB / C));
  CHECK(sys.A(1, 0) == doctest::Approx(estarB / C));
  CHECK(sys.A(0, 2) == doctest::Approx(gamma / to_double(m)));
  CHECK(sys.A(0, 2) == doctest::Approx(1.0 / mu));
  // dp/dt rows: q-part = -gamma/C I, p-part = -F R = eB eps / m.
  CHECK(sys.A(2, 0) == doctest::Approx(-gamma / C));
  CHECK(sys.A(2, 3) == doctest::Approx(eB / to_double(m)));
  CHECK(sys.A(3, 2) == doctest::Approx(-eB / to_double(m)));
  // Drive rows: dq/dt constant = -gamma e*E* - G eE; dp/dt = gamma eE + F e*E*.
  CHECK(sys.b(0) == doctest::Approx(-gamma * 0.0 - estarB * 0.0));
  CHECK(sys.b(2) == doctest::Approx(gamma * 0.5 - eB * (1.0 / 3.0)));
  CHECK(sys.b(3) == doctest::Approx(gamma * 0.0 - eB * 0.0));
}

TEST_CASE("group charts: transport-momentum and frozen-position families") {
  // Constant-force chart: qdot = p/m exactly (the drive cancels the dual drift).
  auto g = group_model("ncGalilei", {{"m", Rat(2)}, {"h", Rat(3)}, {"omega", Rat(2)},
                                     {"kappa", Rat(3)}, {"f1", Rat(1)}, {"f2", Rat(-1)}});
  LinearSystem sys = equations_of_motion(g.ps, g.model);
  CHECK(sys.A(0, 2) == doctest::Approx(0.5));
  CHECK(sys.b(0) == doctest::Approx(0.0).scale(1.0));
  CHECK(sys.b(1) == doctest::Approx(0.0).scale(1.0));
  CHECK(sys.b(2) == doctest::Approx(1.0));
  CHECK(sys.b(3) == doctest::Approx(-1.0));

  // Static chart: dp/dt = -ke q, dk/dt = +mue u, positions frozen.
  auto st = group_model("ncStatic", {{"mu", Rat(2)}, {"beta", Rat(1)}, {"k", Rat(3)}});
  LinearSystem ssys = equations_of_motion(st.ps, st.model);
  double ke = 3.0 - 0.5, mue = 2.0 - 1.0 / 3.0;
  CHECK(ssys.A(2, 0) == doctest::Approx(-ke));
  CHECK(ssys.A(3, 1) == doctest::Approx(mue));
  CHECK(ssys.A.topRows(2).norm() == doctest::Approx(0.0));
}

TEST_CASE("the propagated constant-force chart follows the printed parabola") {
  Phys phys{2.0, 3.0};
  auto g = group_model("ncGalilei", {{"m", Rat(2)}, {"h", Rat(3)}, {"omega", Rat(2)},
                                     {"kappa", Rat(3)}, {"f1", Rat(1)}, {"f2", Rat(-1)}});
  Eigen::VectorXd s0 = vec4(0.1, 0.2, 0.5, -0.3);
  Trajectory traj = propagate(g.ps, g.model, s0, 3.0, Method::Exact, 0.01);
  StateMap chart = {{"q1", 0.1}, {"q2", 0.2}, {"p1", 0.5}, {"p2", -0.3},
                    {"s", 0.0},  {"alpha", std::atan2(-1.0, 1.0)},
                    {"f", std::sqrt(2.0)}, {"m", 2.0}, {"h", 3.0}};
  for (size_t i = 0; i < traj.states.size(); i += 60) {
    StateMap ev = time_evolve("ncGalilei", chart, traj.times[i], phys);
    CHECK(std::abs(traj.states[i](0) - ev.at("q1")) < 1e-12);
    CHECK(std::abs(traj.states[i](2) - ev.at("p1")) < 1e-12);
    CHECK(std::abs(traj.states[i](3) - ev.at("p2")) < 1e-12);
  }
}

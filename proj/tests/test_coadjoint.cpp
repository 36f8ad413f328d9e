#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kinekit/coadjoint.hpp"
#include "kinekit/extensions.hpp"
#include "kinekit/invariants.hpp"
#include "kinekit/kirillov.hpp"

using namespace kinekit;

namespace {

const Phys kPhys{2.0, 3.0};  // omega = 2, kappa = 3

StateMap random_state(const std::string& group, std::mt19937_64& rng) {
  LieAlgebra alg = build_extended_catalog(group_algebra_name(group));
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  StateMap s;
  for (auto& g : alg.generators) s[dual_label(g.name)] = u(rng);
  // Keep the heavyweight labels away from zero so charts stay regular.
  for (auto key : {"m", "h", "mu", "k"})
    if (s.count(key)) s[key] = 1.5 + std::abs(s[key]);
  return s;
}

double state_distance(const StateMap& a, const StateMap& b) {
  double d = 0;
  for (auto& [k, v] : a) d = std::max(d, std::abs(v - b.at(k)));
  return d;
}

double eval_inv(const InvariantSpec& inv, const StateMap& s, const Phys& phys) {
  double total = 0;
  for (auto& [pows, c] : inv.polynomial.terms) {
    double t = to_double(c);
    for (auto& [name, e] : pows) {
      double v;
      if (name == "omega")
        v = phys.omega;
      else if (name == "kappa")
        v = phys.kappa;
      else
        v = s.at(name);
      t *= std::pow(v, e);
    }
    total += t;
  }
  return total;
}

}  // namespace

TEST_CASE("group laws: identity, inverse and associativity") {
  std::mt19937_64 rng(7);
  for (auto& group : coadjoint_group_names()) {
    GroupElement e = group_identity(group);
    for (int trial = 0; trial < 25; ++trial) {
      GroupElement a = random_group_element(group, rng);
      GroupElement b = random_group_element(group, rng);
      GroupElement c = random_group_element(group, rng);
      GroupElement ab_c = group_multiply(group_multiply(a, b, kPhys), c, kPhys);
      GroupElement a_bc = group_multiply(a, group_multiply(b, c, kPhys), kPhys);
      for (size_t i = 0; i < ab_c.params.size(); ++i) {
        INFO(group, " assoc param ", i);
        CHECK(ab_c.params[i] == doctest::Approx(a_bc.params[i]).epsilon(1e-11));
      }
      GroupElement ae = group_multiply(a, e, kPhys);
      GroupElement ea = group_multiply(e, a, kPhys);
      GroupElement ainv = group_inverse(a, kPhys);
      GroupElement prod = group_multiply(a, ainv, kPhys);
      GroupElement prod2 = group_multiply(ainv, a, kPhys);
      for (size_t i = 0; i < a.params.size(); ++i) {
        CHECK(ae.params[i] == doctest::Approx(a.params[i]).epsilon(1e-12));
        CHECK(ea.params[i] == doctest::Approx(a.params[i]).epsilon(1e-12));
        CHECK(std::abs(prod.params[i]) < 1e-11);
        CHECK(std::abs(prod2.params[i]) < 1e-11);
      }
    }
  }
}

TEST_CASE("group law recovers the structure constants of its algebra") {
  // Commutator curves g_a(s) g_b(u) g_a(s)^-1 g_b(u)^-1 expand as
  // s*u*[X_a,X_b] + higher order; central differences in both slots.
  const double hstep = 1e-4;
  for (auto& group : coadjoint_group_names()) {
    LieAlgebra alg = build_extended_catalog(group_algebra_name(group));
    alg.param_values = {{"omega", Rat(2)}, {"kappa", Rat(3)}};
    const int n = alg.dim();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::vector<double> expect(n, 0.0);
        for (int k = 0; k < n; ++k) {
          ParamPoly c = alg.tensor.get(a, b, k);
          if (!c.is_zero()) expect[k] = to_double(alg.resolve(c).constant_value());
        }
        auto comm = [&](double s, double u) {
          GroupElement ga = group_identity(group), gb = group_identity(group);
          ga.params[a] = s;
          gb.params[b] = u;
          GroupElement r = group_multiply(
              group_multiply(group_multiply(ga, gb, kPhys), group_inverse(ga, kPhys), kPhys),
              group_inverse(gb, kPhys), kPhys);
          return r.params;
        };
        auto pp = comm(hstep, hstep), pm = comm(hstep, -hstep);
        auto mp = comm(-hstep, hstep), mm = comm(-hstep, -hstep);
        for (int k = 0; k < n; ++k) {
          double got = (pp[k] - pm[k] - mp[k] + mm[k]) / (4 * hstep * hstep);
          INFO(group, ": [", alg.generators[a].name, ",", alg.generators[b].name, "] -> ",
               alg.generators[k].name);
          CHECK(got == doctest::Approx(expect[k]).epsilon(1e-4).scale(1.0));
        }
      }
  }
}

TEST_CASE("coadjoint action matches the finite-difference transport") {
  std::mt19937_64 rng(13);
  for (auto& group : coadjoint_group_names()) {
    for (int trial = 0; trial < 5; ++trial) {
      GroupElement g = random_group_element(group, rng, 0.7);
      StateMap s = random_state(group, rng);
      StateMap fast = coadjoint_apply(g, s, kPhys);
      StateMap slow = coadjoint_oracle(g, s, kPhys);
      INFO(group, " trial ", trial);
      CHECK(state_distance(fast, slow) < 2e-6);
    }
  }
}

TEST_CASE("coadjoint action property over random pairs") {
  std::mt19937_64 rng(29);
  for (auto& group : coadjoint_group_names()) {
    for (int trial = 0; trial < 100; ++trial) {
      GroupElement g1 = random_group_element(group, rng, 0.8);
      GroupElement g2 = random_group_element(group, rng, 0.8);
      StateMap s = random_state(group, rng);
      StateMap composed = coadjoint_apply(group_multiply(g1, g2, kPhys), s, kPhys);
      StateMap stepwise = coadjoint_apply(g1, coadjoint_apply(g2, s, kPhys), kPhys);
      INFO(group, " trial ", trial);
      CHECK(state_distance(composed, stepwise) < 1e-10);
    }
  }
}

TEST_CASE("identity element leaves every dual point unchanged") {
  std::mt19937_64 rng(31);
  for (auto& group : coadjoint_group_names()) {
    StateMap s = random_state(group, rng);
    CHECK(state_distance(coadjoint_apply(group_identity(group), s, kPhys), s) < 1e-14);
  }
}

TEST_CASE("group mismatch raises an argument error") {
  GroupElement a = group_identity("ncGalilei");
  GroupElement b = group_identity("ncStatic");
  CHECK_THROWS_AS(group_multiply(a, b, kPhys), std::invalid_argument);
}

TEST_CASE("pure rotations rotate the force and fix the charges") {
  StateMap s = {{"j", 0.4}, {"k1", 1.0}, {"k2", -0.5}, {"p1", 0.7}, {"p2", 0.1},
                {"f1", 1.0}, {"f2", 0.0}, {"E", 2.0}, {"m", 1.5}, {"h", 0.5}};
  GroupElement g = group_identity("ncGalilei");
  g.params[0] = M_PI / 2;  // theta
  StateMap r = coadjoint_apply(g, s, kPhys);
  CHECK(r.at("f1") == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
  CHECK(r.at("f2") == doctest::Approx(1.0));
  CHECK(r.at("m") == doctest::Approx(1.5));
  CHECK(r.at("h") == doctest::Approx(0.5));
}

TEST_CASE("pure transport boost shifts the evolving momentum only") {
  StateMap s = {{"j", 0.0}, {"pi1", 0.4}, {"pi2", -0.2}, {"k1", 0.3}, {"k2", 0.9},
                {"p1", 0.5}, {"p2", -0.7}, {"E", 1.0}, {"m", 2.0}, {"h", 0.5}};
  GroupElement g = group_identity("ncParaGalilei-");
  auto names = group_param_names("ncParaGalilei-");
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == "v1") g.params[i] = 0.25;
  StateMap r = coadjoint_apply(g, s, kPhys);
  CHECK(r.at("pi1") == doctest::Approx(0.4));          // transport charge is rotation-only
  CHECK(r.at("p1") == doctest::Approx(0.5 - 2.0 * 0.25));  // p' = p - m v
  CHECK(r.at("p2") == doctest::Approx(-0.7));
}

TEST_CASE("oscillating family: boost-free printed maps at the group level") {
  // NH1D- pure time: p(t) = p cos wt - w k sin wt, k(t) = k cos wt + p/w sin wt.
  StateMap s = {{"k", 0.3}, {"p", 0.8}, {"E", 1.1}, {"m", 2.0}};
  GroupElement g = group_identity("NH1D-");
  g.params[2] = 0.7;  // t
  StateMap r = coadjoint_apply(g, s, kPhys);
  double w = kPhys.omega, t = 0.7;
  CHECK(r.at("p") == doctest::Approx(0.8 * std::cos(w * t) - w * 0.3 * std::sin(w * t)));
  CHECK(r.at("k") == doctest::Approx(0.3 * std::cos(w * t) + 0.8 / w * std::sin(w * t)));
  CHECK(r.at("E") == doctest::Approx(1.1));
}

TEST_CASE("library invariants are constant along 100 random coadjoint motions") {
  std::mt19937_64 rng(41);
  const std::map<std::string, std::string> lib_for_group = {
      {"aristotleCentral", "aristotleCentral"},
      {"aristotleNoncentral", "aristotleNoncentral"},
      {"ncGalilei", "ncGalilei"},
      {"ncParaGalilei+", "ncParaGalilei+"},
      {"ncParaGalilei-", "ncParaGalilei-"},
      {"ncStatic", "ncStatic"},
      {"NH1D+", "NH1D+"},
      {"NH1D-", "NH1D-"},
      {"NH2D+", "anisoNH+"},
      {"NH2D-", "anisoNH-"},
      {"NH3D+", "NH3D+"},
      {"NH3D-", "NH3D-"}};
  for (auto& [group, lib] : lib_for_group) {
    auto invariants = invariant_library(lib);
    StateMap s = random_state(group, rng);
    for (int trial = 0; trial < 100; ++trial) {
      GroupElement g = random_group_element(group, rng, 0.6);
      StateMap r = coadjoint_apply(g, s, kPhys);
      for (auto& inv : invariants) {
        double before = eval_inv(inv, s, kPhys);
        double after = eval_inv(inv, r, kPhys);
        INFO(group, " / ", inv.name, " trial ", trial);
        CHECK(std::abs(after - before) < 1e-9 * std::max(1.0, std::abs(before)));
      }
    }
  }
}

TEST_CASE("time evolution: trivial cases") {
  StateMap s = {{"q1", 0.3}, {"q2", -0.2}, {"p1", 0.7}, {"p2", 0.5}, {"h", 1.0}, {"k", 2.0}};
  StateMap r = time_evolve("aristotleNoncentral", s, 0.0, kPhys);
  CHECK(state_distance(r, s) == 0.0);
  StateMap c = time_evolve("aristotleCentral", {{"p", 1.0}, {"q", 2.0}}, 5.0, kPhys);
  CHECK(c.at("p") == 1.0);
}

TEST_CASE("static-family momenta fall linearly in the frozen positions") {
  StateMap s = {{"q1", 0.3}, {"q2", -0.2}, {"p1", 0.7}, {"p2", 0.5}, {"h", 1.0}, {"k", 2.0}};
  StateMap r = time_evolve("aristotleNoncentral", s, 0.25, kPhys);
  CHECK(r.at("p1") == doctest::Approx(0.7 - 2.0 * 0.25 * 0.3));
  CHECK(r.at("q1") == doctest::Approx(0.3));

  StateMap st = {{"q1", 0.4}, {"q2", 0.1}, {"u1", -0.3}, {"u2", 0.2},
                 {"p1", 1.0}, {"p2", 0.0}, {"kk1", 0.5}, {"kk2", 0.6},
                 {"m", 1.0}, {"mu", 2.0}, {"beta", 0.5}, {"k", 3.0}};
  StateMap rt = time_evolve("ncStatic", st, 0.5, kPhys);
  double ke = 3.0 - 0.25 / 2.0, mue = 2.0 - 0.25 / 3.0;
  CHECK(rt.at("p1") == doctest::Approx(1.0 - 0.5 * ke * 0.4));
  CHECK(rt.at("kk1") == doctest::Approx(0.5 + 0.5 * mue * (-0.3)));
  CHECK(rt.at("q1") == doctest::Approx(0.4));
  CHECK(rt.at("u1") == doctest::Approx(-0.3));
}

TEST_CASE("unit oscillating evolution traces the circle") {
  Phys unit{1.0, 1.0};
  StateMap s = {{"p", 1.0}, {"q", 0.0}, {"m", 1.0}};
  for (double t : {0.3, 1.0, 2.5}) {
    StateMap r = time_evolve("NH1D-", s, t, unit);
    CHECK(r.at("p") == doctest::Approx(std::cos(t)).epsilon(1e-12));
    CHECK(r.at("q") == doctest::Approx(std::sin(t)).epsilon(1e-12));
  }
}

TEST_CASE("time evolution agrees with the pure-time coadjoint motion") {
  std::mt19937_64 rng(53);
  // NH2D: chart (q = k/m, p).
  {
    StateMap s = random_state("NH2D-", rng);
    double m = s.at("m"), t = 0.37;
    GroupElement g = group_identity("NH2D-");
    g.params[4] = t;
    StateMap dual = coadjoint_apply(g, s, kPhys);
    StateMap chart = {{"q1", s.at("k1") / m}, {"q2", s.at("k2") / m},
                      {"p1", s.at("p1")}, {"p2", s.at("p2")}, {"m", m}};
    StateMap ev = time_evolve("NH2D-", chart, t, kPhys);
    CHECK(std::abs(ev.at("q1") - dual.at("k1") / m) < 1e-10);
    CHECK(std::abs(ev.at("p1") - dual.at("p1")) < 1e-10);
  }
  // ncGalilei: q = k/m, s = j - p x q + estarB p^2/2.
  {
    StateMap s = random_state("ncGalilei", rng);
    double m = s.at("m"), h = s.at("h"), t = 0.41;
    double k2 = kPhys.kappa * kPhys.kappa, w2 = kPhys.omega * kPhys.omega;
    double estarB = h * k2 / (m * m * w2);
    auto to_chart = [&](const StateMap& d) {
      StateMap c;
      c["q1"] = d.at("k1") / m;
      c["q2"] = d.at("k2") / m;
      c["p1"] = d.at("p1");
      c["p2"] = d.at("p2");
      double pxq = d.at("p1") * c["q2"] - d.at("p2") * c["q1"];
      double p2 = d.at("p1") * d.at("p1") + d.at("p2") * d.at("p2");
      c["s"] = d.at("j") - pxq + estarB * p2 / 2;
      c["alpha"] = std::atan2(d.at("f2"), d.at("f1"));
      c["f"] = std::hypot(d.at("f1"), d.at("f2"));
      c["m"] = m;
      c["h"] = h;
      return c;
    };
    GroupElement g = group_identity("ncGalilei");
    g.params[7] = t;
    StateMap dual = coadjoint_apply(g, s, kPhys);
    StateMap ev = time_evolve("ncGalilei", to_chart(s), t, kPhys);
    StateMap target = to_chart(dual);
    for (auto key : {"q1", "q2", "p1", "p2", "s", "alpha"}) {
      INFO("ncGalilei chart ", key);
      CHECK(std::abs(ev.at(key) - target.at(key)) < 1e-10);
    }
  }
  // ncParaGalilei-: q = k/m, s = j - q x p - eB q^2/2 with eB = kappa^2 h.
  {
    StateMap s = random_state("ncParaGalilei-", rng);
    double m = s.at("m"), h = s.at("h"), t = 0.29;
    double eB = kPhys.kappa * kPhys.kappa * h;
    auto to_chart = [&](const StateMap& d) {
      StateMap c;
      c["q1"] = d.at("k1") / m;
      c["q2"] = d.at("k2") / m;
      c["p1"] = d.at("p1");
      c["p2"] = d.at("p2");
      double qxp = c["q1"] * d.at("p2") - c["q2"] * d.at("p1");
      double q2 = c["q1"] * c["q1"] + c["q2"] * c["q2"];
      c["s"] = d.at("j") - qxp - eB * q2 / 2;
      c["alpha"] = std::atan2(d.at("pi2"), d.at("pi1"));
      c["pi"] = std::hypot(d.at("pi1"), d.at("pi2"));
      c["m"] = m;
      c["h"] = h;
      return c;
    };
    GroupElement g = group_identity("ncParaGalilei-");
    g.params[7] = t;
    StateMap dual = coadjoint_apply(g, s, kPhys);
    StateMap ev = time_evolve("ncParaGalilei-", to_chart(s), t, kPhys);
    StateMap target = to_chart(dual);
    for (auto key : {"q1", "q2", "p1", "p2", "s", "alpha"}) {
      INFO("ncParaGalilei chart ", key);
      CHECK(std::abs(ev.at(key) - target.at(key)) < 1e-10);
    }
  }
  // ncStatic: q = -f/ke, u = pi/mue.
  {
    StateMap s = random_state("ncStatic", rng);
    double mu = s.at("mu"), beta = s.at("beta"), kh = s.at("k"), t = 0.61;
    double ke = kh - beta * beta / mu, mue = mu - beta * beta / kh;
    auto to_chart = [&](const StateMap& d) {
      StateMap c;
      c["q1"] = -d.at("f1") / ke;
      c["q2"] = -d.at("f2") / ke;
      c["u1"] = d.at("pi1") / mue;
      c["u2"] = d.at("pi2") / mue;
      c["p1"] = d.at("p1");
      c["p2"] = d.at("p2");
      c["kk1"] = d.at("k1");
      c["kk2"] = d.at("k2");
      c["m"] = d.at("m");
      c["mu"] = mu;
      c["beta"] = beta;
      c["k"] = kh;
      return c;
    };
    GroupElement g = group_identity("ncStatic");
    g.params[9] = t;
    StateMap dual = coadjoint_apply(g, s, kPhys);
    StateMap ev = time_evolve("ncStatic", to_chart(s), t, kPhys);
    StateMap target = to_chart(dual);
    for (auto key : {"q1", "q2", "u1", "u2", "p1", "p2", "kk1", "kk2"}) {
      INFO("ncStatic chart ", key);
      CHECK(std::abs(ev.at(key) - target.at(key)) < 1e-10);
    }
  }
}

TEST_CASE("action coefficients match finite differences of the evolution") {
  std::mt19937_64 rng(67);
  const double step = 1e-5;
  for (auto group : {"ncGalilei", "ncParaGalilei+", "ncParaGalilei-"}) {
    StateMap s;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    s["q1"] = u(rng);
    s["q2"] = u(rng);
    s["p1"] = u(rng);
    s["p2"] = u(rng);
    s["s"] = u(rng);
    s["alpha"] = 0.8;
    s["m"] = 1.7;
    s["h"] = 0.6;
    s[std::string(group) == "ncGalilei" ? "f" : "pi"] = 1.3;
    auto co = evolution_coefficients(group, s, kPhys);
    StateMap plus = time_evolve(group, s, step, kPhys);
    StateMap minus = time_evolve(group, s, -step, kPhys);
    double ds = (plus.at("s") - minus.at("s")) / (2 * step);
    double d2s = (plus.at("s") - 2 * s.at("s") + minus.at("s")) / (step * step);
    CHECK(std::abs(ds - co.K / s["m"]) < 1e-8);
    CHECK(std::abs(d2s - co.N / s["m"]) < 1e-4);
  }
}

#include "kinekit/coadjoint.hpp"

#include <cmath>
#include <stdexcept>

#include "kinekit/extensions.hpp"
#include "kinekit/kirillov.hpp"

namespace kinekit {

namespace {

using V2 = std::array<double, 2>;
using V3 = std::array<double, 3>;

V2 rot(double th, const V2& v) {
  double c = std::cos(th), s = std::sin(th);
  return {c * v[0] - s * v[1], s * v[0] + c * v[1]};
}
double cross(const V2& a, const V2& b) { return a[0] * b[1] - a[1] * b[0]; }
double dot(const V2& a, const V2& b) { return a[0] * b[0] + a[1] * b[1]; }
V2 eps_vec(const V2& v) { return {v[1], -v[0]}; }  // (x2, -x1)
V2 add(const V2& a, const V2& b) { return {a[0] + b[0], a[1] + b[1]}; }
V2 sub(const V2& a, const V2& b) { return {a[0] - b[0], a[1] - b[1]}; }
V2 mul(double s, const V2& a) { return {s * a[0], s * a[1]}; }

V3 cross3(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

int nh_dim(const std::string& g) {
  if (g.rfind("NH1D", 0) == 0) return 1;
  if (g.rfind("NH2D", 0) == 0) return 2;
  if (g.rfind("NH3D", 0) == 0) return 3;
  return 0;
}
int nh_sign(const std::string& g) { return g.back() == '+' ? +1 : -1; }

struct Layout {
  std::vector<std::string> names;
};

Layout layout(const std::string& g) {
  if (g == "aristotleCentral") return {{"theta", "x1", "x2", "t", "phi"}};
  if (g == "aristotleNoncentral")
    return {{"theta", "x1", "x2", "eta1", "eta2", "t", "phi", "gamma"}};
  if (g == "ncGalilei")
    return {{"theta", "eta1", "v1", "x1", "v2", "x2", "eta2", "t", "xi", "phi"}};
  if (g == "ncParaGalilei+" || g == "ncParaGalilei-")
    return {{"theta", "l1", "v1", "x1", "v2", "x2", "l2", "t", "xi", "phi"}};
  if (g == "ncStatic")
    return {{"theta", "x1", "x2", "v1", "v2", "eta1", "eta2", "l1", "l2", "t", "xi", "b", "a", "phi"}};
  if (nh_dim(g) == 1) return {{"v", "x", "t", "phi"}};
  if (nh_dim(g) == 2) return {{"v1", "v2", "x1", "x2", "t", "phi", "psi"}};
  if (nh_dim(g) == 3)
    return {{"v1", "v2", "v3", "x1", "x2", "x3", "t", "phi", "th1", "th2", "th3"}};
  throw std::domain_error("unknown group " + g);
}

struct P {  // parameter accessor
  const Layout& lay;
  const std::vector<double>& v;
  double operator()(const std::string& n) const {
    for (size_t i = 0; i < lay.names.size(); ++i)
      if (lay.names[i] == n) return v[i];
    throw std::logic_error("no param " + n);
  }
  V2 vec(const std::string& n) const { return {(*this)(n + "1"), (*this)(n + "2")}; }
};

void put(const Layout& lay, std::vector<double>& out, const std::string& n, double val) {
  for (size_t i = 0; i < lay.names.size(); ++i)
    if (lay.names[i] == n) {
      out[i] = val;
      return;
    }
  throw std::logic_error("no param " + n);
}
void put_vec(const Layout& lay, std::vector<double>& out, const std::string& n, const V2& v) {
  put(lay, out, n + "1", v[0]);
  put(lay, out, n + "2", v[1]);
}

// NH rotation-free flow matrix coefficients: x' = A x + B v, v' = s w^2 B x + A v.
struct NHFlow {
  double A, B;
};
NHFlow nh_flow(int sign, double omega, double t) {
  if (sign < 0) return {std::cos(omega * t), std::sin(omega * t) / omega};
  return {std::cosh(omega * t), std::sinh(omega * t) / omega};
}

StateMap get_all(const StateMap& s) { return s; }

double at(const StateMap& s, const std::string& k) {
  auto it = s.find(k);
  if (it == s.end()) throw std::invalid_argument("state: missing coordinate " + k);
  return it->second;
}
V2 at2(const StateMap& s, const std::string& k) { return {at(s, k + "1"), at(s, k + "2")}; }
void set2(StateMap& s, const std::string& k, const V2& v) {
  s[k + "1"] = v[0];
  s[k + "2"] = v[1];
}

}  // namespace

const std::vector<std::string>& coadjoint_group_names() {
  static const std::vector<std::string> names = {
      "aristotleCentral", "aristotleNoncentral", "ncGalilei",      "ncParaGalilei+",
      "ncParaGalilei-",   "ncStatic",            "NH1D+",          "NH1D-",
      "NH2D+",            "NH2D-",               "NH3D+",          "NH3D-"};
  return names;
}

std::string group_algebra_name(const std::string& group) {
  if (group == "NH2D+") return "anisoNH+";
  if (group == "NH2D-") return "anisoNH-";
  return group;  // all other group names coincide with the catalog names
}

std::vector<std::string> group_param_names(const std::string& group) { return layout(group).names; }

GroupElement group_identity(const std::string& group) {
  return {group, std::vector<double>(layout(group).names.size(), 0.0)};
}

GroupElement random_group_element(const std::string& group, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  GroupElement g = group_identity(group);
  for (auto& p : g.params) p = u(rng);
  return g;
}

GroupElement group_multiply(const GroupElement& ga, const GroupElement& gb, const Phys& phys) {
  if (ga.group != gb.group)
    throw std::invalid_argument("group_multiply: elements of different groups");
  const std::string& G = ga.group;
  Layout lay = layout(G);
  P a{lay, ga.params}, b{lay, gb.params};
  GroupElement out = group_identity(G);
  auto& o = out.params;
  const double k2 = phys.kappa * phys.kappa;
  const double w2 = phys.omega * phys.omega;

  if (int d = nh_dim(G)) {
    int sgn = nh_sign(G);
    double t = (d == 1) ? a("t") : a("t");
    double tp = b("t");
    NHFlow F = nh_flow(sgn, phys.omega, tp);
    std::vector<double> x(d), v(d), xp(d), vp(d), ux(d), uv(d);
    for (int i = 0; i < d; ++i) {
      std::string s = (d == 1) ? "" : std::to_string(i + 1);
      x[i] = a("x" + s);
      v[i] = a("v" + s);
      xp[i] = b("x" + s);
      vp[i] = b("v" + s);
    }
    for (int i = 0; i < d; ++i) {
      ux[i] = F.A * x[i] + F.B * v[i];
      uv[i] = sgn * w2 * F.B * x[i] + F.A * v[i];
    }
    for (int i = 0; i < d; ++i) {
      std::string s = (d == 1) ? "" : std::to_string(i + 1);
      put(lay, o, "x" + s, ux[i] + xp[i]);
      put(lay, o, "v" + s, uv[i] + vp[i]);
    }
    put(lay, o, "t", t + tp);
    double cphi = 0;
    for (int i = 0; i < d; ++i) cphi += 0.5 * (uv[i] * xp[i] - ux[i] * vp[i]);
    put(lay, o, "phi", a("phi") + b("phi") + cphi);
    if (d == 2) {
      double cpsi = -sgn * 0.5 * k2 * (ux[0] * xp[1] - ux[1] * xp[0]) +
                    0.5 * (k2 / w2) * (uv[0] * vp[1] - uv[1] * vp[0]);
      put(lay, o, "psi", a("psi") + b("psi") + cpsi);
    }
    if (d == 3) {
      V3 Ux{ux[0], ux[1], ux[2]}, Xp{xp[0], xp[1], xp[2]};
      V3 Uv{uv[0], uv[1], uv[2]}, Vp{vp[0], vp[1], vp[2]};
      V3 cx = cross3(Ux, Xp), cv = cross3(Uv, Vp);
      for (int c = 0; c < 3; ++c) {
        std::string s = "th" + std::to_string(c + 1);
        put(lay, o, s, a(s) + b(s) + (-sgn * 0.5 * k2) * cx[c] + 0.5 * (k2 / w2) * cv[c]);
      }
    }
    return out;
  }

  double th = a("theta"), thp = b("theta");
  put(lay, o, "theta", th + thp);
  put(lay, o, "t", a("t") + b("t"));
  double t = a("t"), tp = b("t");

  if (G == "aristotleCentral") {
    V2 x = a.vec("x"), xp = rot(th, b.vec("x"));
    put_vec(lay, o, "x", add(x, xp));
    put(lay, o, "phi", a("phi") + b("phi") + 0.5 * k2 * cross(x, xp));
  } else if (G == "aristotleNoncentral") {
    V2 x = a.vec("x"), xp = rot(th, b.vec("x"));
    V2 eta = a.vec("eta"), etap = rot(th, b.vec("eta"));
    put_vec(lay, o, "x", add(x, xp));
    put_vec(lay, o, "eta", add(add(eta, etap), mul(tp, x)));
    put(lay, o, "phi", a("phi") + b("phi") + 0.5 * k2 * cross(x, xp));
    put(lay, o, "gamma", a("gamma") + b("gamma") + 0.5 * dot(x, etap) -
                             0.5 * dot(add(eta, mul(tp, x)), xp));
  } else if (G == "ncGalilei") {
    V2 v = a.vec("v"), vp = rot(th, b.vec("v"));
    V2 x = a.vec("x"), xp = rot(th, b.vec("x"));
    V2 eta = a.vec("eta"), etap = rot(th, b.vec("eta"));
    put_vec(lay, o, "v", add(v, vp));
    put_vec(lay, o, "x", add(add(x, xp), mul(tp, v)));
    V2 cvec = mul(0.5, sub(mul(tp, sub(x, mul(t, v))), mul(t, xp)));
    put_vec(lay, o, "eta", add(add(eta, etap), cvec));
    put(lay, o, "xi", a("xi") + b("xi") + dot(v, xp) + 0.5 * dot(v, v) * tp);
    put(lay, o, "phi", a("phi") + b("phi") + 0.5 * (k2 / w2) * cross(v, vp));
  } else if (G == "ncParaGalilei+" || G == "ncParaGalilei-") {
    double sgn = (G.back() == '+') ? 1.0 : -1.0;
    V2 v = a.vec("v"), vp = rot(th, b.vec("v"));
    V2 x = a.vec("x"), xp = rot(th, b.vec("x"));
    V2 l = a.vec("l"), lp = rot(th, b.vec("l"));
    put_vec(lay, o, "v", add(add(v, vp), mul(sgn * w2 * tp, x)));
    put_vec(lay, o, "x", add(x, xp));
    V2 cvec = mul(0.5, sub(mul(tp, sub(v, mul(sgn * w2 * t, x))), mul(t, vp)));
    put_vec(lay, o, "l", add(add(l, lp), cvec));
    put(lay, o, "xi", a("xi") + b("xi") - dot(x, vp) - sgn * 0.5 * w2 * dot(x, x) * tp);
    put(lay, o, "phi", a("phi") + b("phi") + 0.5 * k2 * cross(x, xp));
  } else if (G == "ncStatic") {
    V2 v = a.vec("v"), vp = rot(th, b.vec("v"));
    V2 x = a.vec("x"), xp = rot(th, b.vec("x"));
    V2 eta = a.vec("eta"), etap = rot(th, b.vec("eta"));
    V2 l = a.vec("l"), lp = rot(th, b.vec("l"));
    put_vec(lay, o, "v", add(v, vp));
    put_vec(lay, o, "x", add(x, xp));
    put_vec(lay, o, "eta", add(add(eta, etap), mul(0.5, sub(mul(tp, x), mul(t, xp)))));
    put_vec(lay, o, "l", add(add(l, lp), mul(0.5, sub(mul(tp, v), mul(t, vp)))));
    V2 Dv = sub(mul(tp, v), mul(t, vp)), Dx = sub(mul(tp, x), mul(t, xp));
    V2 Sv = add(v, vp), Sx = add(x, xp);
    put(lay, o, "xi", a("xi") + b("xi") + 0.5 * (dot(v, xp) - dot(x, vp)));
    put(lay, o, "phi", a("phi") + b("phi") + dot(v, lp) +
                           dot(add(mul(1.0 / 3, v), mul(1.0 / 6, vp)), Dv));
    put(lay, o, "a", a("a") + b("a") + dot(x, etap) +
                         dot(add(mul(1.0 / 3, x), mul(1.0 / 6, xp)), Dx));
    put(lay, o, "b", a("b") + b("b") + dot(v, etap) + dot(x, lp) +
                         (dot(sub(v, vp), Dx) + dot(sub(x, xp), Dv)) / 12.0 +
                         0.25 * (dot(Sx, Dv) + dot(Sv, Dx)));
  } else {
    throw std::domain_error("group_multiply: unknown group " + G);
  }
  return out;
}

GroupElement group_inverse(const GroupElement& g, const Phys& phys) {
  const std::string& G = g.group;
  Layout lay = layout(G);
  P a{lay, g.params};
  GroupElement inv = group_identity(G);
  auto& o = inv.params;

  if (int d = nh_dim(G)) {
    int sgn = nh_sign(G);
    double t = a("t");
    NHFlow F = nh_flow(sgn, phys.omega, -t);
    put(lay, o, "t", -t);
    for (int i = 0; i < d; ++i) {
      std::string s = (d == 1) ? "" : std::to_string(i + 1);
      double x = a("x" + s), v = a("v" + s);
      put(lay, o, "x" + s, -(F.A * x + F.B * v));
      put(lay, o, "v" + s, -(sgn * phys.omega * phys.omega * F.B * x + F.A * v));
    }
  } else {
    put(lay, o, "theta", -a("theta"));
    put(lay, o, "t", -a("t"));
    double th = a("theta"), t = a("t");
    auto setv = [&](const std::string& n, const V2& v) { put_vec(lay, o, n, v); };
    if (G == "aristotleCentral") {
      setv("x", mul(-1, rot(-th, a.vec("x"))));
    } else if (G == "aristotleNoncentral") {
      setv("x", mul(-1, rot(-th, a.vec("x"))));
      setv("eta", mul(-1, rot(-th, sub(a.vec("eta"), mul(t, a.vec("x"))))));
    } else if (G == "ncGalilei") {
      V2 v = a.vec("v"), x = a.vec("x");
      setv("v", mul(-1, rot(-th, v)));
      setv("x", mul(-1, rot(-th, sub(x, mul(t, v)))));
      setv("eta", mul(-1, rot(-th, a.vec("eta"))));
    } else if (G == "ncParaGalilei+" || G == "ncParaGalilei-") {
      double sgn = (G.back() == '+') ? 1.0 : -1.0;
      V2 v = a.vec("v"), x = a.vec("x");
      setv("x", mul(-1, rot(-th, x)));
      setv("v", mul(-1, rot(-th, sub(v, mul(sgn * phys.omega * phys.omega * t, x)))));
      setv("l", mul(-1, rot(-th, a.vec("l"))));
    } else if (G == "ncStatic") {
      setv("x", mul(-1, rot(-th, a.vec("x"))));
      setv("v", mul(-1, rot(-th, a.vec("v"))));
      setv("eta", mul(-1, rot(-th, a.vec("eta"))));
      setv("l", mul(-1, rot(-th, a.vec("l"))));
    } else {
      throw std::domain_error("group_inverse: unknown group " + G);
    }
  }
  // Fix the central slots so that g * g^{-1} = e exactly.
  GroupElement probe = group_multiply(g, inv, phys);
  std::vector<std::string> centrals;
  for (auto& n : lay.names)
    if (n == "phi" || n == "psi" || n == "xi" || n == "gamma" || n == "a" || n == "b" ||
        n.rfind("th", 0) == 0)
      if (n != "theta") centrals.push_back(n);
  for (auto& n : centrals) {
    P pr{lay, probe.params};
    put(lay, o, n, P{lay, inv.params}(n) - pr(n));
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Coadjoint actions.

StateMap coadjoint_apply(const GroupElement& g, const StateMap& inState, const Phys& phys) {
  const std::string& G = g.group;
  Layout lay = layout(G);
  P a{lay, g.params};
  StateMap s = get_all(inState);
  const double k2 = phys.kappa * phys.kappa;
  const double w2 = phys.omega * phys.omega;

  if (int d = nh_dim(G)) {
    int sgn = nh_sign(G);
    double t = a("t");
    NHFlow F = nh_flow(sgn, phys.omega, t);
    std::vector<double> x(d), v(d), p(d), k(d), ux(d), uv(d);
    for (int i = 0; i < d; ++i) {
      std::string c = (d == 1) ? "" : std::to_string(i + 1);
      x[i] = a("x" + c);
      v[i] = a("v" + c);
      p[i] = at(s, "p" + c);
      k[i] = at(s, "k" + c);
    }
    double m = at(s, "m");
    // u = M(-t) w
    for (int i = 0; i < d; ++i) {
      ux[i] = F.A * x[i] - F.B * v[i];
      uv[i] = -sgn * w2 * F.B * x[i] + F.A * v[i];
    }
    std::vector<double> pn(d), kn(d);
    for (int i = 0; i < d; ++i) {
      pn[i] = F.A * p[i] + sgn * w2 * F.B * k[i] - m * uv[i];
      kn[i] = F.B * p[i] + F.A * k[i] + m * ux[i];
    }
    double pv = 0, kx = 0, vv = 0, xx = 0;
    for (int i = 0; i < d; ++i) {
      pv += p[i] * v[i];
      kx += k[i] * x[i];
      vv += v[i] * v[i];
      xx += x[i] * x[i];
    }
    double E = at(s, "E") - (pv + sgn * w2 * kx) + 0.5 * m * (vv - sgn * w2 * xx);
    if (d == 2) {
      double h = at(s, "h");
      pn[0] += -sgn * h * k2 * ux[1];
      pn[1] += sgn * h * k2 * ux[0];
      kn[0] += (h * k2 / w2) * uv[1];
      kn[1] += -(h * k2 / w2) * uv[0];
      E += -sgn * h * k2 * (x[0] * v[1] - x[1] * v[0]);
    }
    if (d == 3) {
      V3 hv{at(s, "h1"), at(s, "h2"), at(s, "h3")};
      V3 Ux{ux[0], ux[1], ux[2]}, Uv{uv[0], uv[1], uv[2]};
      V3 hx = cross3(Ux, hv), hvv = cross3(Uv, hv);
      for (int i = 0; i < 3; ++i) {
        pn[i] += -sgn * k2 * hx[i];
        kn[i] += (k2 / w2) * hvv[i];
      }
      V3 X{x[0], x[1], x[2]}, V{v[0], v[1], v[2]};
      V3 xv = cross3(X, V);
      E += -sgn * k2 * (hv[0] * xv[0] + hv[1] * xv[1] + hv[2] * xv[2]);
    }
    for (int i = 0; i < d; ++i) {
      std::string c = (d == 1) ? "" : std::to_string(i + 1);
      s["p" + c] = pn[i];
      s["k" + c] = kn[i];
    }
    s["E"] = E;
    return s;
  }

  double th = a("theta"), t = a("t");

  if (G == "aristotleCentral") {
    V2 x = a.vec("x");
    V2 p = at2(s, "p");
    double h = at(s, "h");
    V2 Rp = rot(th, p);
    set2(s, "p", add(Rp, mul(h * k2, eps_vec(x))));
    s["j"] = at(s, "j") + cross(x, Rp) - 0.5 * h * k2 * dot(x, x);
  } else if (G == "aristotleNoncentral") {
    V2 x = a.vec("x"), eta = a.vec("eta");
    V2 p = at2(s, "p"), f = at2(s, "f");
    double h = at(s, "h"), kc = at(s, "k");
    V2 Rp = rot(th, p), Rf = rot(th, f);
    set2(s, "p", add(add(Rp, mul(t, Rf)), add(mul(kc, sub(eta, mul(t, x))), mul(h * k2, eps_vec(x)))));
    set2(s, "f", sub(Rf, mul(kc, x)));
    s["j"] = at(s, "j") + cross(x, Rp) + cross(eta, Rf) + kc * cross(x, eta) -
             0.5 * h * k2 * dot(x, x);
    s["E"] = at(s, "E") - dot(x, Rf) + 0.5 * kc * dot(x, x);
  } else if (G == "ncGalilei") {
    V2 v = a.vec("v"), x = a.vec("x"), eta = a.vec("eta");
    V2 p = at2(s, "p"), kk = at2(s, "k"), f = at2(s, "f");
    double m = at(s, "m"), h = at(s, "h");
    V2 Rp = rot(th, p), Rk = rot(th, kk), Rf = rot(th, f);
    set2(s, "f", Rf);
    set2(s, "p", sub(add(Rp, mul(t, Rf)), mul(m, v)));
    set2(s, "k", add(add(add(Rk, mul(t, Rp)), mul(0.5 * t * t, Rf)),
                     add(mul(m, sub(x, mul(t, v))), mul(h * k2 / w2, eps_vec(v)))));
    s["E"] = at(s, "E") - dot(v, Rp) - dot(x, Rf) + 0.5 * m * dot(v, v);
    s["j"] = at(s, "j") + cross(x, Rp) + cross(v, Rk) + cross(eta, Rf) +
             0.5 * t * cross(x, Rf) + m * cross(v, x) - 0.5 * (h * k2 / w2) * dot(v, v);
  } else if (G == "ncParaGalilei+" || G == "ncParaGalilei-") {
    double sgn = (G.back() == '+') ? 1.0 : -1.0;
    V2 v = a.vec("v"), x = a.vec("x"), l = a.vec("l");
    V2 pi = at2(s, "pi"), kk = at2(s, "k"), p = at2(s, "p");
    double m = at(s, "m"), h = at(s, "h");
    V2 Rpi = rot(th, pi), Rk = rot(th, kk), Rp = rot(th, p);
    set2(s, "pi", Rpi);
    set2(s, "k", add(add(Rk, mul(t, Rpi)), mul(m, x)));
    set2(s, "p", add(add(add(Rp, mul(sgn * w2 * t, Rk)), mul(sgn * w2 * 0.5 * t * t, Rpi)),
                     add(mul(h * k2, eps_vec(x)), mul(-m, sub(v, mul(sgn * w2 * t, x))))));
    s["E"] = at(s, "E") - sgn * w2 * dot(x, Rk) - dot(v, Rpi) - sgn * 0.5 * m * w2 * dot(x, x);
    s["j"] = at(s, "j") + cross(x, Rp) + cross(v, Rk) + cross(l, Rpi) +
             0.5 * t * cross(v, Rpi) + m * cross(v, x) - 0.5 * h * k2 * dot(x, x);
  } else if (G == "ncStatic") {
    V2 v = a.vec("v"), x = a.vec("x"), eta = a.vec("eta"), l = a.vec("l");
    V2 p = at2(s, "p"), kk = at2(s, "k"), f = at2(s, "f"), pi = at2(s, "pi");
    double m = at(s, "m"), mu = at(s, "mu"), beta = at(s, "beta"), kh = at(s, "k");
    V2 Rp = rot(th, p), Rk = rot(th, kk), Rf = rot(th, f), Rpi = rot(th, pi);
    set2(s, "f", sub(sub(Rf, mul(kh, x)), mul(beta, v)));
    set2(s, "pi", sub(sub(Rpi, mul(mu, v)), mul(beta, x)));
    set2(s, "p",
         add(sub(add(Rp, mul(t, Rf)), add(mul(0.5 * t * kh, x), add(mul(0.5 * t * beta, v), mul(m, v)))),
             add(mul(kh, eta), mul(beta, l))));
    set2(s, "k", add(add(add(Rk, mul(t, Rpi)), mul(m, x)),
                     add(mul(-0.5 * t, add(mul(mu, v), mul(beta, x))), add(mul(mu, l), mul(beta, eta)))));
    s["E"] = at(s, "E") - dot(v, Rpi) - dot(x, Rf) + 0.5 * kh * dot(x, x) + 0.5 * mu * dot(v, v) +
             beta * dot(x, v);
    s["j"] = at(s, "j") + cross(x, Rp) + cross(v, Rk) + cross(l, Rpi) + cross(eta, Rf) +
             0.5 * t * cross(v, Rpi) + 0.5 * t * cross(x, Rf) + m * cross(v, x) +
             beta * cross(x, l) + beta * cross(v, eta) + mu * cross(v, l) + kh * cross(x, eta);
  } else {
    throw std::domain_error("coadjoint_apply: unknown group " + G);
  }
  return s;
}

StateMap coadjoint_oracle(const GroupElement& g, const StateMap& state, const Phys& phys,
                          double step) {
  LieAlgebra alg = build_extended_catalog(group_algebra_name(g.group));
  Layout lay = layout(g.group);
  const int n = alg.dim();
  if (static_cast<int>(lay.names.size()) != n)
    throw std::logic_error("coadjoint_oracle: layout/algebra mismatch for " + g.group);
  GroupElement ginv = group_inverse(g, phys);
  std::vector<double> alpha(n);
  for (int i = 0; i < n; ++i) alpha[i] = at(state, dual_label(alg.generators[i].name));
  StateMap out = state;
  for (int aIdx = 0; aIdx < n; ++aIdx) {
    // Ad_{g^{-1}} X_a by central differences through the group law.
    GroupElement ep = group_identity(g.group), em = group_identity(g.group);
    ep.params[aIdx] = step;
    em.params[aIdx] = -step;
    GroupElement cp = group_multiply(group_multiply(ginv, ep, phys), g, phys);
    GroupElement cm = group_multiply(group_multiply(ginv, em, phys), g, phys);
    double acc = 0;
    for (int b = 0; b < n; ++b) acc += alpha[b] * (cp.params[b] - cm.params[b]) / (2 * step);
    out[dual_label(alg.generators[aIdx].name)] = acc;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed-form evolutions and action coefficients.

EvolutionCoefficients evolution_coefficients(const std::string& group, const StateMap& s,
                                             const Phys& phys) {
  const double k2 = phys.kappa * phys.kappa;
  const double w2 = phys.omega * phys.omega;
  EvolutionCoefficients out;
  if (group == "ncGalilei") {
    double m = at(s, "m"), h = at(s, "h");
    double estarB = h * k2 / (m * m * w2);  // dual field from the boost-boost charge
    V2 q = at2(s, "q"), p = at2(s, "p");
    double fmag = at(s, "f"), alpha = at(s, "alpha");
    V2 f{fmag * std::cos(alpha), fmag * std::sin(alpha)};
    out.K = m * cross(q, f) + m * estarB * dot(p, f);
    out.N = cross(p, f) + m * estarB * dot(f, f);
  } else if (group == "ncParaGalilei+" || group == "ncParaGalilei-") {
    double sgn = (group.back() == '+') ? 1.0 : -1.0;
    double m = at(s, "m"), h = at(s, "h");
    double eB = k2 * h;  // magnetic charge from the momentum-momentum bracket
    V2 q = at2(s, "q"), p = at2(s, "p");
    double pimag = at(s, "pi"), alpha = at(s, "alpha");
    V2 pi{pimag * std::cos(alpha), pimag * std::sin(alpha)};
    out.K = cross(p, pi) - eB * dot(pi, q);
    out.N = sgn * m * w2 * cross(q, pi) - eB * dot(pi, pi) / m;
  } else {
    throw std::domain_error("evolution_coefficients: unknown group " + group);
  }
  return out;
}

StateMap time_evolve(const std::string& group, const StateMap& state, double t,
                     const Phys& phys) {
  StateMap s = state;
  const double w = phys.omega;
  if (int d = nh_dim(group)) {
    int sgn = nh_sign(group);
    double m = at(s, "m");
    NHFlow F = nh_flow(sgn, w, t);
    for (int i = 0; i < d; ++i) {
      std::string c = (d == 1) ? "" : std::to_string(i + 1);
      double p = at(s, "p" + c), q = at(s, "q" + c);
      s["p" + c] = F.A * p + sgn * m * w * w * F.B * q;
      s["q" + c] = (F.B / m) * p + F.A * q;
    }
    return s;
  }
  if (group == "aristotleCentral") return s;  // time translations act trivially
  if (group == "aristotleNoncentral") {
    double kc = at(s, "k");
    V2 p = at2(s, "p"), q = at2(s, "q");
    set2(s, "p", sub(p, mul(kc * t, q)));
    return s;
  }
  if (group == "ncGalilei") {
    double m = at(s, "m");
    V2 q = at2(s, "q"), p = at2(s, "p");
    double fmag = at(s, "f"), alpha = at(s, "alpha");
    V2 f{fmag * std::cos(alpha), fmag * std::sin(alpha)};
    auto co = evolution_coefficients(group, state, phys);
    set2(s, "q", add(add(q, mul(t / m, p)), mul(0.5 * t * t / m, f)));
    set2(s, "p", add(p, mul(t, f)));
    s["s"] = at(s, "s") + co.K * t / m + 0.5 * co.N * t * t / m;
    return s;
  }
  if (group == "ncParaGalilei+" || group == "ncParaGalilei-") {
    double sgn = (group.back() == '+') ? 1.0 : -1.0;
    double m = at(s, "m");
    double invC = sgn * m * w * w;  // 1/C
    V2 q = at2(s, "q"), p = at2(s, "p");
    double pimag = at(s, "pi"), alpha = at(s, "alpha");
    V2 pi{pimag * std::cos(alpha), pimag * std::sin(alpha)};
    auto co = evolution_coefficients(group, state, phys);
    set2(s, "q", add(q, mul(t / m, pi)));
    set2(s, "p", add(add(p, mul(invC * t, q)), mul(0.5 * invC * t * t / m, pi)));
    s["s"] = at(s, "s") + co.K * t / m + 0.5 * co.N * t * t / m;
    return s;
  }
  if (group == "ncStatic") {
    double mu = at(s, "mu"), beta = at(s, "beta"), kh = at(s, "k");
    double ke = kh - beta * beta / mu;
    double mue = mu - beta * beta / kh;
    V2 q = at2(s, "q"), u = at2(s, "u"), p = at2(s, "p"), kk = at2(s, "kk");
    set2(s, "p", sub(p, mul(ke * t, q)));
    set2(s, "kk", add(kk, mul(mue * t, u)));
    return s;
  }
  throw std::domain_error("time_evolve: unknown group " + group);
}

}  // namespace kinekit

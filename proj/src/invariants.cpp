#include "kinekit/invariants.hpp"

#include <Eigen/Dense>

#include <random>
#include <stdexcept>

#include "kinekit/extensions.hpp"

namespace kinekit {

namespace {

ParamPoly S(const std::string& n, int e = 1) { return ParamPoly::sym(n, e); }
ParamPoly C(long num, long den = 1) { return ParamPoly(Rat(num, den)); }

ParamPoly dot2(const std::string& a, const std::string& b) {
  return S(a + "1") * S(b + "1") + S(a + "2") * S(b + "2");
}
ParamPoly cross2(const std::string& a, const std::string& b) {
  return S(a + "1") * S(b + "2") - S(a + "2") * S(b + "1");
}
ParamPoly sq2(const std::string& a) { return dot2(a, a); }

// 3x3 polynomial-matrix helpers for the three-dimensional invariant.
using PolyMat3 = std::array<std::array<ParamPoly, 3>, 3>;

PolyMat3 pm_mul(const PolyMat3& a, const PolyMat3& b) {
  PolyMat3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

ParamPoly pm_det(const PolyMat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

PolyMat3 pm_adjugate(const PolyMat3& m) {
  PolyMat3 a;
  auto co = [&](int i, int j) {
    int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
    return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[j][i] = co(i, j);
  return a;
}

ParamPoly quad_form(const char* left, const PolyMat3& m, const char* right) {
  ParamPoly out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out += S(std::string(left) + std::to_string(i + 1)) * m[i][j] *
             S(std::string(right) + std::to_string(j + 1));
  return out;
}

std::vector<InvariantSpec> nh2d_library(int sign) {
  // Cleared effective-mass form: D0 = m^2 + sign h^2 kappa^4 / omega^2 and
  // D0*U = D0 E - m|p|^2/2 + sign m w^2 |k|^2/2 - sign h kappa^2 (p x k).
  ParamPoly D0 = S("m", 2) + Rat(sign) * S("h", 2) * S("kappa", 4) * S("omega", -2);
  ParamPoly U = D0 * S("E") - Rat(1, 2) * S("m") * sq2("p") +
                Rat(sign, 2) * S("m") * S("omega", 2) * sq2("k") -
                Rat(sign) * S("h") * S("kappa", 2) * cross2("p", "k");
  return {{"m", S("m")}, {"h", S("h")}, {"U", U}};
}

std::vector<InvariantSpec> nh3d_library(int sign) {
  // A = (kappa^2/(m omega^2)) h x (cross matrix); Phi = I - sign w^2 A^2.
  PolyMat3 A;
  ParamPoly g = S("kappa", 2) * S("omega", -2) * S("m", -1);
  // (A)_{ij} = g * h_k eps_{kij}
  A[0][1] = g * S("h3");
  A[1][0] = -(g * S("h3"));
  A[1][2] = g * S("h1");
  A[2][1] = -(g * S("h1"));
  A[2][0] = g * S("h2");
  A[0][2] = -(g * S("h2"));
  PolyMat3 A2 = pm_mul(A, A);
  PolyMat3 Phi;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Phi[i][j] = Rat(-sign) * S("omega", 2) * A2[i][j];
      if (i == j) Phi[i][j] += C(1);
    }
  ParamPoly det = pm_det(Phi);
  PolyMat3 adj = pm_adjugate(Phi);
  PolyMat3 adjA = pm_mul(adj, A);
  // det*U = det*E - p.adj p/(2m) + sign w^2 k.adj k/(2m) - sign (w^2/m) p.adj A k
  ParamPoly U = det * S("E") - Rat(1, 2) * S("m", -1) * quad_form("p", adj, "p") +
                Rat(sign, 2) * S("omega", 2) * S("m", -1) * quad_form("k", adj, "k") -
                Rat(sign) * S("omega", 2) * S("m", -1) * quad_form("p", adjA, "k");
  return {{"m", S("m")}, {"h1", S("h1")}, {"h2", S("h2")}, {"h3", S("h3")}, {"U", U}};
}

}  // namespace

std::vector<InvariantSpec> invariant_library(const std::string& name) {
  if (name == "NH1D+" || name == "NH1D-") {
    int sign = name.back() == '+' ? 1 : -1;
    ParamPoly U = S("E") - Rat(1, 2) * S("m", -1) * S("p", 2) +
                  Rat(sign, 2) * S("omega", 2) * S("m", -1) * S("k", 2);
    return {{"m", S("m")}, {"U", U}};
  }
  if (name == "anisoNH+" || name == "anisoNH-") return nh2d_library(name.back() == '+' ? 1 : -1);
  if (name == "NH3D+" || name == "NH3D-") return nh3d_library(name.back() == '+' ? 1 : -1);
  if (name == "anisoG")
    return {{"m", S("m")}, {"h", S("h")}, {"U", S("E") - Rat(1, 2) * S("m", -1) * sq2("p")}};
  if (name == "anisoG'+" || name == "anisoG'-") {
    int sign = name.back() == '+' ? 1 : -1;
    ParamPoly U = S("E") + Rat(sign, 2) * S("omega", 2) * S("m", -1) * sq2("k");
    return {{"m", S("m")}, {"h", S("h")}, {"U", U}};
  }
  if (name == "anisoSt") return {{"m", S("m")}, {"h", S("h")}, {"E", S("E")}};
  if (name == "anisoC") return {{"E", S("E")}, {"h", S("h")}, {"Eh", S("E") * S("h")}};
  if (name == "aristotleCentral")
    return {{"E", S("E")},
            {"h", S("h")},
            {"s", S("j") + Rat(1, 2) * S("h", -1) * S("kappa", -2) * sq2("p")}};
  if (name == "aristotleNoncentral") {
    // q = -f/k; s = j + p x q - (h kappa^2/2) q^2, U = E - k q^2 / 2.
    ParamPoly s = S("j") - S("k", -1) * cross2("p", "f") -
                  Rat(1, 2) * S("h") * S("kappa", 2) * S("k", -2) * sq2("f");
    ParamPoly U = S("E") - Rat(1, 2) * S("k", -1) * sq2("f");
    return {{"h", S("h")}, {"k", S("k")}, {"s", s}, {"U", U}};
  }
  if (name == "ncGalilei") {
    ParamPoly U = S("E") - Rat(1, 2) * S("m", -1) * sq2("p") + S("m", -1) * dot2("f", "k") +
                  S("h") * S("kappa", 2) * S("omega", -2) * S("m", -2) * cross2("f", "p");
    return {{"m", S("m")}, {"h", S("h")}, {"f2", sq2("f")}, {"U", U}};
  }
  if (name == "ncParaGalilei+" || name == "ncParaGalilei-") {
    int sign = name.back() == '+' ? 1 : -1;
    ParamPoly U = S("E") + Rat(sign, 2) * S("omega", 2) * S("m", -1) * sq2("k") -
                  S("m", -1) * dot2("pi", "p") + S("h") * S("kappa", 2) * S("m", -2) * cross2("pi", "k");
    return {{"m", S("m")}, {"h", S("h")}, {"pi2", sq2("pi")}, {"U", U}};
  }
  if (name == "ncStatic") {
    // D = beta^2 - mu k; cleared spin and internal energy.
    ParamPoly D = S("beta", 2) - S("mu") * S("k");
    ParamPoly s = D * S("j") + S("k") * cross2("k", "pi") + S("mu") * cross2("p", "f") -
                  S("beta") * cross2("p", "pi") - S("beta") * cross2("k", "f") +
                  S("m") * cross2("f", "pi");
    ParamPoly U = D * S("E") + Rat(1, 2) * S("mu") * sq2("f") - S("beta") * dot2("f", "pi") +
                  Rat(1, 2) * S("k") * sq2("pi");
    return {{"m", S("m")}, {"mu", S("mu")}, {"beta", S("beta")}, {"k", S("k")}, {"s", s}, {"U", U}};
  }
  throw std::domain_error("invariant_library: unknown group " + name);
}

std::vector<std::string> trivial_coordinates(const LieAlgebra& alg) {
  std::vector<bool> central(alg.dim(), true);
  for (auto& [idx, c] : alg.tensor.entries) {
    central[std::get<0>(idx)] = false;
    central[std::get<1>(idx)] = false;
  }
  std::vector<std::string> out;
  for (int i = 0; i < alg.dim(); ++i)
    if (central[i]) out.push_back(dual_label(alg.generators[i].name));
  return out;
}

namespace {

double eval_double(const ParamPoly& p, const std::map<std::string, double>& v) {
  double total = 0;
  for (auto& [pows, c] : p.terms) {
    double t = to_double(c);
    for (auto& [k, e] : pows) {
      auto it = v.find(k);
      if (it == v.end()) throw std::runtime_error("eval_double: unbound symbol " + k);
      t *= std::pow(it->second, e);
    }
    total += t;
  }
  return total;
}

std::vector<Powers> monomial_basis(const std::vector<std::string>& vars, int degree) {
  std::vector<Powers> out;
  std::function<void(size_t, int, Powers&)> rec = [&](size_t i, int left, Powers& cur) {
    if (i == vars.size()) {
      int total = 0;
      for (auto& [k, e] : cur) total += e;
      if (total >= 1) out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      if (e) cur[vars[i]] = e;
      rec(i + 1, left - e, cur);
      cur.erase(vars[i]);
    }
  };
  Powers cur;
  rec(0, degree, cur);
  return out;
}

}  // namespace

DualPoint generic_point(const LieAlgebra& alg, unsigned seed) {
  std::mt19937_64 rng(seed);
  DualPoint p = DualPoint::zero(alg);
  for (auto& v : p.values) v = random_rat(rng, true);
  return p;
}

CasimirSearch find_casimirs(const LieAlgebra& alg, const DualPoint& reference, int degree,
                            const std::vector<int>& trivial_idx, unsigned seed) {
  const int n = alg.dim();
  std::vector<bool> trivial(n, false);
  for (int t : trivial_idx) trivial[t] = true;
  std::vector<std::string> vars;
  for (int i = 0; i < n; ++i)
    if (!trivial[i]) vars.push_back(reference.labels[i]);
  auto monos = monomial_basis(vars, degree);
  const int nm = static_cast<int>(monos.size());

  auto Ksym = kirillov_matrix_sym(alg);
  std::map<std::string, double> base;
  for (auto& [k, v] : alg.param_values) base[k] = to_double(v);
  for (int i = 0; i < n; ++i) base[reference.labels[i]] = to_double(reference.values[i]);

  auto sample_rows = [&](std::mt19937_64& rng, int count, Eigen::MatrixXd& M) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    M.resize(count * n, nm);
    for (int sIdx = 0; sIdx < count; ++sIdx) {
      std::map<std::string, double> bind = base;
      for (auto& v : vars) bind[v] = u(rng);
      // Row block: residual components sum_j K_ij * d(mono_c)/da_j.
      for (int i = 0; i < n; ++i)
        for (int c = 0; c < nm; ++c) {
          double acc = 0;
          ParamPoly mono{ParamMonomial(Rat(1), monos[c])};
          for (int j = 0; j < n; ++j) {
            if (Ksym[i][j].is_zero()) continue;
            ParamPoly dj = mono.derivative(reference.labels[j]);
            if (dj.is_zero()) continue;
            acc += eval_double(Ksym[i][j], bind) * eval_double(dj, bind);
          }
          M(sIdx * n + i, c) = acc;
        }
    }
  };

  auto solve_dim = [&](unsigned sd, Eigen::MatrixXd& V, int& dim) {
    std::mt19937_64 rng(sd);
    Eigen::MatrixXd M;
    sample_rows(rng, 3 * nm, M);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinV);
    double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    double tol = std::max(1e-10 * smax, 1e-12);
    dim = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) < tol) ++dim;
    V = svd.matrixV().rightCols(dim);
  };

  Eigen::MatrixXd V;
  int dim = 0;
  solve_dim(seed, V, dim);
  int dim2 = 0;
  Eigen::MatrixXd V2;
  solve_dim(seed + 1000003, V2, dim2);

  CasimirSearch out;
  out.solution_dim = dim;
  out.stable = (dim == dim2);

  // Validate each candidate at fresh points.
  std::mt19937_64 rng(seed + 7);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int c = 0; c < dim; ++c) {
    NumericInvariant inv;
    inv.monomials = monos;
    double lead = 0;
    for (int i = 0; i < nm; ++i) lead = std::max(lead, std::abs(V(i, c)));
    for (int i = 0; i < nm; ++i) inv.coefficients.push_back(V(i, c) / (lead ? lead : 1.0));
    double worst = 0;
    for (int t = 0; t < 100; ++t) {
      std::map<std::string, double> bind = base;
      for (auto& v : vars) bind[v] = u(rng);
      for (int i = 0; i < n; ++i) {
        double acc = 0;
        for (int cm = 0; cm < nm; ++cm) {
          if (inv.coefficients[cm] == 0) continue;
          ParamPoly mono{ParamMonomial(Rat(1), monos[cm])};
          for (int j = 0; j < n; ++j) {
            if (Ksym[i][j].is_zero()) continue;
            ParamPoly dj = mono.derivative(reference.labels[j]);
            if (dj.is_zero()) continue;
            acc += inv.coefficients[cm] * eval_double(Ksym[i][j], bind) * eval_double(dj, bind);
          }
        }
        worst = std::max(worst, std::abs(acc));
      }
    }
    inv.residual = worst;
    if (worst < 1e-9) out.basis.push_back(std::move(inv));
  }
  return out;
}

double casimir_fit_residual(const LieAlgebra& alg, const CasimirSearch& search,
                            const InvariantSpec& inv, const DualPoint& reference,
                            const std::vector<int>& trivial_idx) {
  const int n = alg.dim();
  std::vector<bool> trivial(n, false);
  for (int t : trivial_idx) trivial[t] = true;

  // Freeze central coordinates and parameters, expand over the search basis
  // monomials; the constant term is dropped (affine mixing with the frozen
  // trivial invariants is allowed).
  ParamPoly frozen = inv.polynomial;
  for (auto& [k, v] : alg.param_values) frozen = frozen.substitute(k, v);
  for (int i = 0; i < n; ++i)
    if (trivial[i]) frozen = frozen.substitute(reference.labels[i], reference.values[i]);

  if (search.basis.empty()) return frozen.is_constant() ? 0.0 : 1.0;
  const auto& monos = search.basis[0].monomials;
  Eigen::VectorXd target = Eigen::VectorXd::Zero(monos.size());
  for (auto& [pows, c] : frozen.terms) {
    if (pows.empty()) continue;  // affine offset
    auto it = std::find(monos.begin(), monos.end(), pows);
    if (it == monos.end()) return 1.0;  // outside the degree window
    target(it - monos.begin()) = to_double(c);
  }
  double norm = target.norm();
  if (norm == 0) return 0.0;
  Eigen::MatrixXd B(monos.size(), search.basis.size());
  for (size_t c = 0; c < search.basis.size(); ++c)
    for (size_t r = 0; r < monos.size(); ++r) B(r, c) = search.basis[c].coefficients[r];
  Eigen::VectorXd coef = B.colPivHouseholderQr().solve(target);
  return (B * coef - target).norm() / norm;
}

}  // namespace kinekit

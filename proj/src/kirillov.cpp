#include "kinekit/kirillov.hpp"

#include <algorithm>
#include <stdexcept>

namespace kinekit {

std::string dual_label(const std::string& g) {
  if (g == "J") return "j";
  if (g == "H") return "E";
  if (g == "S") return "h";
  if (g == "M") return "m";
  if (g == "Mp") return "mu";
  if (g == "B") return "beta";
  if (g == "Lam") return "k";
  if (g == "J1" || g == "J2" || g == "J3") return "h" + g.substr(1);
  std::string out = g;
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

DualPoint DualPoint::zero(const LieAlgebra& alg) {
  DualPoint p;
  for (auto& g : alg.generators) p.labels.push_back(dual_label(g.name));
  p.values.assign(p.labels.size(), Rat(0));
  return p;
}

Rat DualPoint::get(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return values[i];
  throw std::invalid_argument("DualPoint: no coordinate " + label);
}

void DualPoint::set(const std::string& label, const Rat& v) {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) {
      values[i] = v;
      return;
    }
  throw std::invalid_argument("DualPoint: no coordinate " + label);
}

std::map<std::string, Rat> DualPoint::as_map() const {
  std::map<std::string, Rat> m;
  for (size_t i = 0; i < labels.size(); ++i) m[labels[i]] = values[i];
  return m;
}

std::vector<std::vector<ParamPoly>> kirillov_matrix_sym(const LieAlgebra& alg) {
  const int n = alg.dim();
  std::vector<std::vector<ParamPoly>> K(n, std::vector<ParamPoly>(n));
  for (auto& [idx, c] : alg.tensor.entries) {
    auto [i, j, k] = idx;
    ParamPoly term = c * ParamPoly::sym(dual_label(alg.generators[k].name));
    K[i][j] += term;
    K[j][i] += -term;
  }
  return K;
}

RatMat kirillov_matrix(const LieAlgebra& alg, const DualPoint& a) {
  if (static_cast<int>(a.labels.size()) != alg.dim())
    throw std::invalid_argument("kirillov_matrix: point dimension mismatch");
  auto sym = kirillov_matrix_sym(alg);
  std::map<std::string, Rat> bind = alg.param_values;
  for (size_t i = 0; i < a.labels.size(); ++i) bind[a.labels[i]] = a.values[i];
  const int n = alg.dim();
  RatMat K(n, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!sym[i][j].is_zero()) K[i][j] = sym[i][j].evaluate(bind);
  return K;
}

ParamPoly lie_poisson_bracket_sym(const LieAlgebra& alg, const ParamPoly& f, const ParamPoly& g) {
  auto K = kirillov_matrix_sym(alg);
  const int n = alg.dim();
  std::vector<std::string> lab;
  for (auto& gen : alg.generators) lab.push_back(dual_label(gen.name));
  ParamPoly out;
  for (int i = 0; i < n; ++i) {
    ParamPoly gi = g.derivative(lab[i]);
    if (gi.is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (K[i][j].is_zero()) continue;
      ParamPoly fj = f.derivative(lab[j]);
      if (fj.is_zero()) continue;
      out += K[i][j] * gi * fj;
    }
  }
  return out;
}

Rat lie_poisson_bracket(const LieAlgebra& alg, const ParamPoly& f, const ParamPoly& g,
                        const DualPoint& a) {
  ParamPoly sym = lie_poisson_bracket_sym(alg, f, g);
  std::map<std::string, Rat> bind = alg.param_values;
  for (size_t i = 0; i < a.labels.size(); ++i) bind[a.labels[i]] = a.values[i];
  return sym.evaluate(bind);
}

std::vector<ParamPoly> casimir_residual_sym(const LieAlgebra& alg, const ParamPoly& inv) {
  auto K = kirillov_matrix_sym(alg);
  const int n = alg.dim();
  std::vector<std::string> lab;
  for (auto& gen : alg.generators) lab.push_back(dual_label(gen.name));
  std::vector<ParamPoly> res(n);
  for (int j = 0; j < n; ++j) {
    ParamPoly dj = inv.derivative(lab[j]);
    if (dj.is_zero()) continue;
    for (int i = 0; i < n; ++i)
      if (!K[i][j].is_zero()) res[i] += K[i][j] * dj;
  }
  return res;
}

RatVec casimir_residual(const LieAlgebra& alg, const ParamPoly& inv, const DualPoint& a) {
  auto sym = casimir_residual_sym(alg, inv);
  std::map<std::string, Rat> bind = alg.param_values;
  for (size_t i = 0; i < a.labels.size(); ++i) bind[a.labels[i]] = a.values[i];
  RatVec out;
  for (auto& p : sym) out.push_back(p.is_zero() ? Rat(0) : p.evaluate(bind));
  return out;
}

OrbitChart restrict_and_invert(const LieAlgebra& alg, const DualPoint& a,
                               const std::vector<int>& chart) {
  RatMat K = kirillov_matrix(alg, a);
  const int m = static_cast<int>(chart.size());
  OrbitChart c;
  c.indices = chart;
  for (int i : chart) c.labels.push_back(a.labels[i]);
  c.omega.assign(m, RatVec(m));
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s) c.omega[r][s] = K[chart[r]][chart[s]];
  try {
    c.theta = rat_inverse(c.omega);
  } catch (const std::domain_error&) {
    throw std::domain_error("restrict_and_invert: singular restriction of rank " +
                            std::to_string(rat_rank(c.omega)));
  }
  return c;
}

OrbitChart restrict_and_invert(const LieAlgebra& alg, const DualPoint& a,
                               const std::vector<std::string>& chart_labels) {
  std::vector<int> idx;
  for (auto& l : chart_labels) {
    auto it = std::find(a.labels.begin(), a.labels.end(), l);
    if (it == a.labels.end()) throw std::invalid_argument("restrict_and_invert: no coordinate " + l);
    idx.push_back(static_cast<int>(it - a.labels.begin()));
  }
  return restrict_and_invert(alg, a, idx);
}

OrbitChart relabel_chart(const OrbitChart& chart, const RatMat& L,
                         const std::vector<std::string>& new_labels) {
  OrbitChart out;
  out.indices = chart.indices;
  out.labels = new_labels;
  RatMat Lt = rat_transpose(L);
  out.omega = rat_mul(rat_mul(L, chart.omega), Lt);
  RatMat Linv = rat_inverse(L);
  out.theta = rat_mul(rat_mul(rat_transpose(Linv), chart.theta), Linv);
  return out;
}

std::vector<std::string> default_chart(const std::string& name) {
  if (name == "NH1D+" || name == "NH1D-") return {"k", "p"};
  if (name == "anisoNH+" || name == "anisoNH-" || name == "anisoG" || name == "anisoG'+" ||
      name == "anisoG'-" || name == "anisoSt" || name == "anisoC")
    return {"k1", "k2", "p1", "p2"};
  if (name == "aristotleCentral") return {"p1", "p2"};
  if (name == "aristotleNoncentral") return {"p1", "p2", "f1", "f2"};
  if (name == "ncGalilei") return {"j", "f1", "k1", "p1", "k2", "p2"};
  if (name == "ncNH+" || name == "ncNH-") return {"k1", "k2", "p1", "p2"};
  if (name == "ncParaGalilei+" || name == "ncParaGalilei-")
    return {"j", "pi1", "k1", "p1", "k2", "p2"};
  if (name == "ncStatic") return {"p1", "p2", "k1", "k2", "f1", "f2", "pi1", "pi2"};
  if (name == "NH3D+" || name == "NH3D-") return {"k1", "k2", "k3", "p1", "p2", "p3"};
  throw std::domain_error("default_chart: unknown group " + name);
}

}  // namespace kinekit

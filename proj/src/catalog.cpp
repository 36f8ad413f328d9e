#include "kinekit/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace kinekit {

namespace {

ParamPoly mono(long num, long den, Powers p) { return ParamPoly(ParamMonomial(Rat(num, den), std::move(p))); }

// gamma = kappa^2/omega^2 (i.e. 1/c^2 after c = omega/kappa).
ParamPoly gamma_poly() { return mono(1, 1, {{"kappa", 2}, {"omega", -2}}); }
ParamPoly kappa2() { return mono(1, 1, {{"kappa", 2}}); }
ParamPoly omega2() { return mono(1, 1, {{"omega", 2}}); }

const Dim kDimJ{0, 0, 0};
const Dim kDimK{-1, 1, 0};
const Dim kDimP{-1, 0, 0};
const Dim kDimH{0, -1, 0};

struct NameRow {
  const char* name;
  int lambda;
  bool gamma;
  int beta;
};

// (lambda, gamma, beta) -> name, covering all 12 rows.
constexpr NameRow kRows[] = {
    {"dS+", 1, true, +1}, {"P", 1, true, 0},   {"dS-", 1, true, -1},
    {"NH+", 1, false, +1}, {"G", 1, false, 0},  {"NH-", 1, false, -1},
    {"P'+", 0, true, +1},  {"C", 0, true, 0},   {"P'-", 0, true, -1},
    {"G'+", 0, false, +1}, {"St", 0, false, 0}, {"G'-", 0, false, -1},
};

SpacetimeAttributes attributes_for(const KinematicalParams& p) {
  SpacetimeAttributes a;
  a.absolute_time = !p.gamma_inv_c2;   // relative time iff gamma = 1/c^2
  a.absolute_space = (p.lambda == 0);  // relative space iff boosts move time evolution
  a.cosmological = (p.beta_sign != 0);
  return a;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"dS+", "P",   "dS-", "NH+", "G",  "NH-",
                                                 "P'+", "C",   "P'-", "G'+", "G'-", "St"};
  return names;
}

CatalogEntry build_kinematical(const KinematicalParams& p) {
  if (p.lambda != 0 && p.lambda != 1) throw std::invalid_argument("build_kinematical: lambda must be 0 or 1");
  if (p.beta_sign < -1 || p.beta_sign > 1) throw std::invalid_argument("build_kinematical: beta sign must be -1, 0 or +1");

  std::vector<GeneratorMeta> gens = {{"J", kDimJ},  {"K1", kDimK}, {"K2", kDimK},
                                     {"P1", kDimP}, {"P2", kDimP}, {"H", kDimH}};
  const int J = 0, K1 = 1, K2 = 2, P1 = 3, P2 = 4, H = 5;
  StructureTensor t(6);
  // Rotations: [J,V1] = V2, [J,V2] = -V1 for V in {K,P}.
  t.set(J, K1, K2, ParamPoly(Rat(1)));
  t.set(J, K2, K1, ParamPoly(Rat(-1)));
  t.set(J, P1, P2, ParamPoly(Rat(1)));
  t.set(J, P2, P1, ParamPoly(Rat(-1)));
  // [K_j,K_k] = -lambda*gamma J eps, [K_j,P_k] = gamma delta H, [K_j,H] = lambda P_j.
  if (p.lambda == 1 && p.gamma_inv_c2) t.set(K1, K2, J, -gamma_poly());
  if (p.gamma_inv_c2) {
    t.set(K1, P1, H, gamma_poly());
    t.set(K2, P2, H, gamma_poly());
  }
  if (p.lambda == 1) {
    t.set(K1, H, P1, ParamPoly(Rat(1)));
    t.set(K2, H, P2, ParamPoly(Rat(1)));
  }
  // [P_j,P_k] = beta*gamma J eps, [P_j,H] = beta K_j with beta = sign*omega^2.
  if (p.beta_sign != 0) {
    ParamPoly b = omega2() * Rat(p.beta_sign);
    if (p.gamma_inv_c2) t.set(P1, P2, J, kappa2() * Rat(p.beta_sign));
    t.set(P1, H, K1, b);
    t.set(P2, H, K2, b);
  }
  CatalogEntry e;
  for (auto& row : kRows)
    if (row.lambda == p.lambda && row.gamma == p.gamma_inv_c2 && row.beta == p.beta_sign)
      e.name = row.name;
  e.params = p;
  e.algebra = build(gens, std::move(t), {}, JacobiPolicy::Strict);
  e.attributes = attributes_for(p);
  // Rotationless reduction exists exactly when J is absent from every RHS.
  bool j_on_rhs = false;
  for (auto& [idx, c] : e.algebra.tensor.entries)
    if (std::get<2>(idx) == J) j_on_rhs = true;
  if (!j_on_rhs) e.anisotropic = anisotropic_reduce(e);
  return e;
}

CatalogEntry catalog_entry(const std::string& name) {
  for (auto& row : kRows)
    if (name == row.name)
      return build_kinematical({row.lambda, row.gamma, row.beta});
  throw std::domain_error("catalog_entry: unknown algebra name " + name);
}

ClassifyResult classify(const LieAlgebra& alg) {
  auto try_match = [&](const LieAlgebra& candidate) -> std::optional<std::string> {
    if (candidate.dim() != alg.dim()) return std::nullopt;
    if (candidate.tensor == alg.tensor) return std::string();
    // Locate the first differing bracket for the error message.
    std::ostringstream os;
    for (int i = 0; i < alg.dim(); ++i)
      for (int j = i + 1; j < alg.dim(); ++j)
        for (int k = 0; k < alg.dim(); ++k)
          if (!(candidate.tensor.get(i, j, k) - alg.tensor.get(i, j, k)).is_zero()) {
            os << "[" << candidate.generators[i].name << "," << candidate.generators[j].name
               << "] component " << candidate.generators[k].name;
            return os.str();  // non-empty => mismatch detail
          }
    return os.str();
  };

  std::string first_mismatch;
  for (auto& name : catalog_names()) {
    CatalogEntry e = catalog_entry(name);
    if (alg.dim() == 6) {
      auto r = try_match(e.algebra);
      if (r && r->empty())
        return {e.name, e.params, e.attributes};
      if (r && first_mismatch.empty()) first_mismatch = e.name + ": " + *r;
    } else if (alg.dim() == 5 && e.anisotropic) {
      auto r = try_match(*e.anisotropic);
      if (r && r->empty())
        return {e.name, e.params, e.attributes};
      if (r && first_mismatch.empty()) first_mismatch = e.name + ": " + *r;
    }
  }
  throw std::domain_error("classify: unknown algebra; first mismatch vs " + first_mismatch);
}

LieAlgebra anisotropic_reduce(const CatalogEntry& entry) {
  const LieAlgebra& alg = entry.algebra;
  const int J = 0;
  for (auto& [idx, c] : alg.tensor.entries) {
    auto [i, j, k] = idx;
    if (k == J && i != J && j != J)
      throw std::domain_error("anisotropic_reduce: rotation generator appears on the RHS of [" +
                              alg.generators[i].name + "," + alg.generators[j].name +
                              "]; reduction impossible for " + entry.name);
  }
  std::vector<GeneratorMeta> gens(alg.generators.begin() + 1, alg.generators.end());
  StructureTensor t(5);
  for (auto& [idx, c] : alg.tensor.entries) {
    auto [i, j, k] = idx;
    if (i == J || j == J) continue;
    t.set(i - 1, j - 1, k - 1, c);
  }
  return build(gens, std::move(t), alg.param_values, JacobiPolicy::Strict);
}

std::map<std::string, int> contraction_weights(ContractionKind kind) {
  std::map<std::string, int> w = {{"J", 0}, {"K1", 0}, {"K2", 0}, {"P1", 0}, {"P2", 0}, {"H", 0}};
  switch (kind) {
    case ContractionKind::VelocitySpace:
      w["K1"] = w["K2"] = w["P1"] = w["P2"] = 1;
      break;
    case ContractionKind::VelocityTime:
      w["K1"] = w["K2"] = w["H"] = 1;
      break;
    case ContractionKind::SpaceTime:
      w["P1"] = w["P2"] = w["H"] = 1;
      break;
  }
  return w;
}

std::string contraction_target(const std::string& name, ContractionKind kind) {
  CatalogEntry e = catalog_entry(name);
  LieAlgebra limit = contract(e.algebra, contraction_weights(kind));
  return classify(limit).name;
}

}  // namespace kinekit

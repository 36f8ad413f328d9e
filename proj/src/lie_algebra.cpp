#include "kinekit/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace kinekit {

void StructureTensor::set(int i, int j, int k, const ParamPoly& c) {
  if (i == j) {
    if (!c.is_zero()) throw std::invalid_argument("StructureTensor: [X,X] must vanish");
    return;
  }
  if (i < j) {
    if (c.is_zero())
      entries.erase({i, j, k});
    else
      entries[{i, j, k}] = c;
  } else {
    set(j, i, k, -c);
  }
}

void StructureTensor::add(int i, int j, int k, const ParamPoly& c) { set(i, j, k, get(i, j, k) + c); }

ParamPoly StructureTensor::get(int i, int j, int k) const {
  if (i == j) return {};
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = entries.find({i, j, k});
  if (it == entries.end()) return {};
  return flip ? -it->second : it->second;
}

bool StructureTensor::operator==(const StructureTensor& o) const {
  return dim == o.dim && entries == o.entries;
}

int LieAlgebra::index_of(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (generators[i].name == name) return i;
  throw std::invalid_argument("LieAlgebra: no generator named " + name);
}

ParamPoly LieAlgebra::resolve(const ParamPoly& p) const {
  ParamPoly out = p;
  for (auto& [name, value] : param_values) out = out.substitute(name, value);
  return out;
}

LieAlgebra build(std::vector<GeneratorMeta> gens, StructureTensor tensor,
                 std::map<std::string, Rat> param_values, JacobiPolicy policy) {
  if (tensor.dim != static_cast<int>(gens.size()))
    throw std::invalid_argument("build: tensor dimension does not match generator count");
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = a + 1; b < gens.size(); ++b)
      if (gens[a].name == gens[b].name)
        throw std::invalid_argument("build: duplicate generator name " + gens[a].name);
  LieAlgebra alg{std::move(gens), std::move(tensor), std::move(param_values)};
  if (policy == JacobiPolicy::Strict) {
    auto rep = jacobi_check(alg);
    if (!rep.ok) {
      std::ostringstream os;
      auto& v = rep.violations.front();
      os << "build: Jacobi identity fails at (" << v.i << "," << v.j << "," << v.k
         << ") component " << v.l << ": " << v.residual.str();
      throw std::invalid_argument(os.str());
    }
  }
  return alg;
}

std::vector<Rat> bracket(const LieAlgebra& alg, const std::vector<Rat>& x,
                         const std::vector<Rat>& y) {
  const int n = alg.dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw std::invalid_argument("bracket: coefficient vector length mismatch");
  std::vector<Rat> z(n, Rat(0));
  for (auto& [idx, c] : alg.tensor.entries) {
    auto [i, j, k] = idx;
    Rat w = x[i] * y[j] - x[j] * y[i];
    if (w == 0) continue;
    ParamPoly r = alg.resolve(c);
    if (!r.is_constant()) throw std::invalid_argument("bracket: unresolved parameters in entry");
    z[k] += r.constant_value() * w;
  }
  return z;
}

std::vector<ParamPoly> bracket_sym(const LieAlgebra& alg, const std::vector<ParamPoly>& x,
                                   const std::vector<ParamPoly>& y) {
  const int n = alg.dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw std::invalid_argument("bracket_sym: coefficient vector length mismatch");
  std::vector<ParamPoly> z(n);
  for (auto& [idx, c] : alg.tensor.entries) {
    auto [i, j, k] = idx;
    z[k] += c * (x[i] * y[j] - x[j] * y[i]);
  }
  return z;
}

JacobiReport jacobi_check(const LieAlgebra& alg) {
  JacobiReport rep;
  const int n = alg.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          ParamPoly res;
          for (int r = 0; r < n; ++r) {
            res += alg.tensor.get(i, r, l) * alg.tensor.get(j, k, r);
            res += alg.tensor.get(j, r, l) * alg.tensor.get(k, i, r);
            res += alg.tensor.get(k, r, l) * alg.tensor.get(i, j, r);
          }
          if (!res.is_zero()) {
            rep.ok = false;
            rep.violations.push_back({i, j, k, l, res});
          }
        }
  return rep;
}

LieAlgebra contract(const LieAlgebra& alg, const std::map<std::string, int>& weights) {
  const int n = alg.dim();
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) {
    auto it = weights.find(alg.generators[i].name);
    if (it == weights.end())
      throw std::invalid_argument("contract: missing weight for " + alg.generators[i].name);
    if (it->second < 0) throw std::invalid_argument("contract: weights must be non-negative");
    w[i] = it->second;
  }
  StructureTensor t(n);
  for (auto& [idx, c] : alg.tensor.entries) {
    auto [i, j, k] = idx;
    int excess = w[i] + w[j] - w[k];
    if (excess == 0) {
      t.set(i, j, k, c);
    } else if (excess < 0) {
      std::ostringstream os;
      os << "contract: divergent limit at (" << i << "," << j << "->" << k << ")";
      throw std::domain_error(os.str());
    }
  }
  return build(alg.generators, std::move(t), alg.param_values, JacobiPolicy::Strict);
}

const std::map<std::string, Dim>& parameter_dims() {
  static const std::map<std::string, Dim> dims = {
      {"omega", {0, -1, 0}}, {"kappa", {-1, 0, 0}}, {"c", {1, -1, 0}},
      {"m", {0, 0, 1}},      {"h", {2, -1, 1}},
  };
  return dims;
}

std::vector<DimAuditViolation> dimension_audit(const LieAlgebra& alg) {
  std::vector<DimAuditViolation> out;
  auto& pd = parameter_dims();
  for (auto& [idx, c] : alg.tensor.entries) {
    auto [i, j, k] = idx;
    Dim lhs = alg.generators[i].dim;
    for (int a = 0; a < 3; ++a) lhs[a] += alg.generators[j].dim[a];
    for (auto& [pows, coef] : c.terms) {
      Dim rhs = alg.generators[k].dim;
      bool known = true;
      for (auto& [name, e] : pows) {
        auto it = pd.find(name);
        if (it == pd.end()) {
          known = false;
          break;
        }
        for (int a = 0; a < 3; ++a) rhs[a] += it->second[a] * e;
      }
      if (!known) {
        out.push_back({i, j, k, "unknown parameter dimension in " + c.str()});
        continue;
      }
      if (rhs != lhs) {
        std::ostringstream os;
        os << "dim([" << alg.generators[i].name << "," << alg.generators[j].name << "]) != dim("
           << alg.generators[k].name << ") + dim(coefficient)";
        out.push_back({i, j, k, os.str()});
      }
    }
  }
  return out;
}

}  // namespace kinekit

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "kinekit/polynomial.hpp"

namespace kinekit {

/// (L, T, M) exponents of a physical dimension.
using Dim = std::array<int, 3>;

struct GeneratorMeta {
  std::string name;
  Dim dim{0, 0, 0};
};

/// Sparse structure constants C^k_ij of a finite-dimensional Lie algebra.
/// Entries are stored for i<j only; antisymmetry is implied.
class StructureTensor {
 public:
  int dim = 0;
  // (i,j,k) with i<j  ->  exact coefficient.
  std::map<std::tuple<int, int, int>, ParamPoly> entries;

  StructureTensor() = default;
  explicit StructureTensor(int d) : dim(d) {}

  void set(int i, int j, int k, const ParamPoly& c);
  void add(int i, int j, int k, const ParamPoly& c);
  /// C^k_ij with antisymmetry applied; zero when absent.
  ParamPoly get(int i, int j, int k) const;
  bool operator==(const StructureTensor& o) const;
};

struct JacobiViolation {
  int i, j, k, l;
  ParamPoly residual;
};

struct JacobiReport {
  bool ok = true;
  std::vector<JacobiViolation> violations;
};

struct LieAlgebra {
  std::vector<GeneratorMeta> generators;
  StructureTensor tensor;
  std::map<std::string, Rat> param_values;

  int dim() const { return static_cast<int>(generators.size()); }
  int index_of(const std::string& name) const;
  ParamPoly resolve(const ParamPoly& p) const;  // bind param_values that appear
};

enum class JacobiPolicy { Strict, Skip };

/// Checked constructor: validates tensor dimension and, when strict, the
/// Jacobi identity (exactly, as polynomials in the parameters).
LieAlgebra build(std::vector<GeneratorMeta> gens, StructureTensor tensor,
                 std::map<std::string, Rat> param_values = {},
                 JacobiPolicy policy = JacobiPolicy::Strict);

/// [X,Y]^k = C^k_ij X^i Y^j on exact coefficient vectors.
std::vector<Rat> bracket(const LieAlgebra& alg, const std::vector<Rat>& x,
                         const std::vector<Rat>& y);

/// Same, with symbolic coefficients.
std::vector<ParamPoly> bracket_sym(const LieAlgebra& alg, const std::vector<ParamPoly>& x,
                                   const std::vector<ParamPoly>& y);

/// Exact verification of the cyclic identity
/// C^l_ir C^r_jk + C^l_jr C^r_ki + C^l_kr C^r_ij = 0.
JacobiReport jacobi_check(const LieAlgebra& alg);

/// Grading limit of the rescaling X_i -> eps^{w_i} X_i as eps -> 0:
/// entries with w_i+w_j-w_k = 0 survive, positive excess vanishes, negative
/// excess on a nonzero entry diverges and throws.
LieAlgebra contract(const LieAlgebra& alg, const std::map<std::string, int>& weights);

struct DimAuditViolation {
  int i, j, k;
  std::string detail;
};

/// Physical dimensions of the named parameters used across the catalog.
const std::map<std::string, Dim>& parameter_dims();

/// Checks dim(gen_i)+dim(gen_j) == dim(gen_k) + dim(coefficient monomial)
/// for every stored entry.
std::vector<DimAuditViolation> dimension_audit(const LieAlgebra& alg);

}  // namespace kinekit

#include "kinekit/extensions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kinekit {

namespace {

int pair_index(int i, int j, int n) {
  // i < j
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

int pair_count(int n) { return n * (n - 1) / 2; }

ParamPoly mono(long num, long den, Powers p) {
  return ParamPoly(ParamMonomial(Rat(num, den), std::move(p)));
}
ParamPoly g_inv_c2() { return mono(1, 1, {{"kappa", 2}, {"omega", -2}}); }
ParamPoly kappa2() { return mono(1, 1, {{"kappa", 2}}); }
ParamPoly omega2() { return mono(1, 1, {{"omega", 2}}); }

// Generic rational bindings for any unbound parameters, cross-checked over
// several instantiations so rank decisions hold with overwhelming certainty.
std::vector<std::map<std::string, Rat>> generic_bindings(const LieAlgebra& alg, int count) {
  std::vector<std::string> symbols;
  for (auto& [idx, c] : alg.tensor.entries)
    for (auto& s : c.symbols())
      if (!alg.param_values.count(s) &&
          std::find(symbols.begin(), symbols.end(), s) == symbols.end())
        symbols.push_back(s);
  std::mt19937_64 rng(0xC0FFEE);
  std::vector<std::map<std::string, Rat>> out;
  for (int t = 0; t < count; ++t) {
    std::map<std::string, Rat> b = alg.param_values;
    for (auto& s : symbols) b[s] = random_rat(rng, true);
    out.push_back(std::move(b));
  }
  return out;
}

Rat entry_value(const LieAlgebra& alg, int i, int j, int k,
                const std::map<std::string, Rat>& bind) {
  ParamPoly p = alg.tensor.get(i, j, k);
  if (p.is_zero()) return Rat(0);
  return p.evaluate(bind);
}

RatVec flatten(const TwoCochain& c) {
  RatVec x(pair_count(c.base_dim) * c.ext_dim, Rat(0));
  for (auto& [ij, v] : c.values) {
    int p = pair_index(ij.first, ij.second, c.base_dim);
    for (int a = 0; a < c.ext_dim; ++a) x[p * c.ext_dim + a] = v[a];
  }
  return x;
}

TwoCochain unflatten(const RatVec& x, int n, int ext_dim) {
  TwoCochain c;
  c.base_dim = n;
  c.ext_dim = ext_dim;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int p = pair_index(i, j, n);
      RatVec v(x.begin() + p * ext_dim, x.begin() + (p + 1) * ext_dim);
      bool nz = std::any_of(v.begin(), v.end(), [](const Rat& r) { return r != 0; });
      if (nz) c.values[{i, j}] = v;
    }
  return c;
}

// rho(X_i) as an ext_dim x ext_dim matrix.
RatMat action_matrix(const ExtensionAction& act, int i) {
  RatMat m(act.ext_dim, RatVec(act.ext_dim, Rat(0)));
  for (int b = 0; b < act.ext_dim; ++b) {
    RatVec v = act.get(i, b);
    for (int s = 0; s < act.ext_dim; ++s) m[s][b] = v[s];
  }
  return m;
}

void validate_action(const ExtensionProblem& prob, const std::map<std::string, Rat>& bind) {
  const int n = prob.base.dim();
  const int A = static_cast<int>(prob.ext_generators.size());
  if (prob.action.is_zero()) return;
  std::vector<RatMat> rho(n);
  for (int i = 0; i < n; ++i) rho[i] = action_matrix(prob.action, i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatMat comm = rat_mul(rho[i], rho[j]);
      RatMat ji = rat_mul(rho[j], rho[i]);
      RatMat target(A, RatVec(A, Rat(0)));
      for (int k = 0; k < n; ++k) {
        Rat c = entry_value(prob.base, i, j, k, bind);
        if (c == 0) continue;
        for (int a = 0; a < A; ++a)
          for (int b = 0; b < A; ++b) target[a][b] += c * rho[k][a][b];
      }
      for (int a = 0; a < A; ++a)
        for (int b = 0; b < A; ++b)
          if (comm[a][b] - ji[a][b] != target[a][b])
            throw std::domain_error(
                "extension action is not a representation on base pair (" +
                prob.base.generators[i].name + "," + prob.base.generators[j].name + ")");
    }
}

// Closure rows of the (possibly twisted) cocycle system for all triples and
// extension components, in the flattened unknown layout.
RatMat closure_matrix(const ExtensionProblem& prob, const std::map<std::string, Rat>& bind) {
  const int n = prob.base.dim();
  const int A = static_cast<int>(prob.ext_generators.size());
  const int cols = pair_count(n) * A;
  RatMat rows;
  std::vector<RatMat> rho(n);
  for (int i = 0; i < n; ++i) rho[i] = action_matrix(prob.action, i);

  auto add_d = [&](RatVec& row, int i, int j, int alpha, const Rat& coef) {
    if (i == j || coef == 0) return;
    Rat c = coef;
    int a = i, b = j;
    if (a > b) {
      std::swap(a, b);
      c = -c;
    }
    row[pair_index(a, b, n) * A + alpha] += c;
  };

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int s = 0; s < A; ++s) {
          RatVec row(cols, Rat(0));
          // rho(X_i) d(X_j,X_k) - rho(X_j) d(X_i,X_k) + rho(X_k) d(X_i,X_j)
          for (int b = 0; b < A; ++b) {
            add_d(row, j, k, b, rho[i][s][b]);
            add_d(row, i, k, b, -rho[j][s][b]);
            add_d(row, i, j, b, rho[k][s][b]);
          }
          // d(X_i,[X_j,X_k]) + d(X_j,[X_k,X_i]) + d(X_k,[X_i,X_j])
          for (int r = 0; r < n; ++r) {
            add_d(row, i, r, s, entry_value(prob.base, j, k, r, bind));
            add_d(row, j, r, s, entry_value(prob.base, k, i, r, bind));
            add_d(row, k, r, s, entry_value(prob.base, i, j, r, bind));
          }
          bool nz = std::any_of(row.begin(), row.end(), [](const Rat& r) { return r != 0; });
          if (nz) rows.push_back(std::move(row));
        }
  if (rows.empty()) rows.push_back(RatVec(cols, Rat(0)));
  return rows;
}

std::vector<TwoCochain> coboundary_basis(const ExtensionProblem& prob,
                                         const std::map<std::string, Rat>& bind) {
  const int n = prob.base.dim();
  const int A = static_cast<int>(prob.ext_generators.size());
  std::vector<TwoCochain> image;
  RatMat independent;  // flattened, for rank bookkeeping
  for (int g = 0; g < n; ++g)
    for (int a = 0; a < A; ++a) {
      RatMat beta(A, RatVec(n, Rat(0)));
      beta[a][g] = 1;
      ExtensionProblem bound = prob;
      bound.base.param_values = bind;
      TwoCochain d = coboundary1(bound, beta);
      RatVec flat = flatten(d);
      bool nz = std::any_of(flat.begin(), flat.end(), [](const Rat& r) { return r != 0; });
      if (!nz) continue;
      std::vector<RatVec> span;
      for (auto& c : image) span.push_back(flatten(c));
      if (!rat_in_span(span, flat)) image.push_back(d);
    }
  return image;
}

struct SolveOnce {
  std::vector<TwoCochain> z2, b2;
  int h2 = 0;
};

SolveOnce solve_instance(const ExtensionProblem& prob, const std::map<std::string, Rat>& bind) {
  validate_action(prob, bind);
  const int n = prob.base.dim();
  const int A = static_cast<int>(prob.ext_generators.size());
  RatMat m = closure_matrix(prob, bind);
  SolveOnce out;
  for (auto& v : rat_nullspace(std::move(m))) out.z2.push_back(unflatten(v, n, A));
  out.b2 = coboundary_basis(prob, bind);
  out.h2 = static_cast<int>(out.z2.size() - out.b2.size());
  return out;
}

}  // namespace

RatVec TwoCochain::get(int i, int j) const {
  if (i == j) return RatVec(ext_dim, Rat(0));
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = values.find({i, j});
  if (it == values.end()) return RatVec(ext_dim, Rat(0));
  RatVec v = it->second;
  if (flip)
    for (auto& c : v) c = -c;
  return v;
}

void TwoCochain::set(int i, int j, RatVec v) {
  if (i == j) throw std::invalid_argument("TwoCochain: diagonal entry must vanish");
  if (i > j) {
    for (auto& c : v) c = -c;
    std::swap(i, j);
  }
  bool nz = std::any_of(v.begin(), v.end(), [](const Rat& r) { return r != 0; });
  if (nz)
    values[{i, j}] = std::move(v);
  else
    values.erase({i, j});
}

RatVec ExtensionAction::get(int i, int beta) const {
  auto it = entries.find({i, beta});
  if (it == entries.end()) return RatVec(ext_dim, Rat(0));
  return it->second;
}

void ExtensionAction::set(int i, int beta, RatVec v) {
  bool nz = std::any_of(v.begin(), v.end(), [](const Rat& r) { return r != 0; });
  if (nz)
    entries[{i, beta}] = std::move(v);
  else
    entries.erase({i, beta});
}

ExtensionResult solve_central(const ExtensionProblem& problem, bool equivariant) {
  if (!problem.action.is_zero())
    throw std::invalid_argument("solve_central: action tensor must vanish");
  if (!equivariant) {
    auto binds = generic_bindings(problem.base, 3);
    SolveOnce first = solve_instance(problem, binds[0]);
    for (int t = 1; t < 3; ++t) {
      SolveOnce check = solve_instance(problem, binds[t]);
      if (check.h2 != first.h2 || check.z2.size() != first.z2.size())
        throw std::runtime_error("solve_central: instantiation cross-check disagrees");
    }
    ExtensionResult res;
    res.z2_basis = first.z2;
    res.b2_basis = first.b2;
    res.h2_dim = first.h2;
    return res;
  }

  // Equivariant ansatz on a rotationless kinematical base: cochains built from
  // delta and epsilon on the (K,P) pairs, one abstract extension direction.
  const LieAlgebra& base = problem.base;
  int K1 = base.index_of("K1"), K2 = base.index_of("K2");
  int P1 = base.index_of("P1"), P2 = base.index_of("P2");
  const int n = base.dim();
  auto shape = [&](std::initializer_list<std::tuple<int, int, long>> ent) {
    TwoCochain c;
    c.base_dim = n;
    c.ext_dim = 1;
    for (auto& [i, j, v] : ent) c.set(i, j, {Rat(v)});
    return c;
  };
  // Signature under parity (K->-K, P->-P, H->H) and time reversal (K->-K, P->P, H->-H):
  // eps(K,K) and eps(P,P) are even/even; delta(K,P) and eps(K,P) are even/odd.
  std::vector<TwoCochain> even_block = {shape({{K1, K2, 1}}), shape({{P1, P2, 1}})};
  std::vector<TwoCochain> odd_block = {shape({{K1, P1, 1}, {K2, P2, 1}}),
                                       shape({{K1, P2, 1}, {K2, P1, -1}})};

  auto binds = generic_bindings(base, 1);
  // The ansatz lives in one abstract extension direction regardless of how
  // many generators the caller supplied.
  ExtensionProblem abstract;
  abstract.base = problem.base;
  abstract.ext_generators = {{"Y", {0, 0, 0}}};
  abstract.action.base_dim = base.dim();
  abstract.action.ext_dim = 1;
  RatMat closure = closure_matrix(abstract, binds[0]);
  auto solve_block = [&](const std::vector<TwoCochain>& block) {
    // Solve closure restricted to span(block).
    RatMat m;
    for (auto& row : closure) {
      RatVec r(block.size(), Rat(0));
      for (size_t s = 0; s < block.size(); ++s) {
        RatVec flat = flatten(block[s]);
        for (size_t c = 0; c < flat.size(); ++c) r[s] += row[c] * flat[c];
      }
      m.push_back(std::move(r));
    }
    std::vector<TwoCochain> sol;
    for (auto& coeffs : rat_nullspace(std::move(m))) {
      RatVec flat(pair_count(n), Rat(0));
      for (size_t s = 0; s < block.size(); ++s) {
        RatVec bs = flatten(block[s]);
        for (size_t c = 0; c < flat.size(); ++c) flat[c] += coeffs[s] * bs[c];
      }
      sol.push_back(unflatten(flat, n, 1));
    }
    return sol;
  };

  ExtensionResult res;
  auto even_sol = solve_block(even_block);
  auto odd_sol = solve_block(odd_block);
  res.z2_basis = even_sol;
  res.z2_basis.insert(res.z2_basis.end(), odd_sol.begin(), odd_sol.end());
  res.h2_dim = static_cast<int>(res.z2_basis.size());  // no coboundaries meet the ansatz
  res.generator_count = (even_sol.empty() ? 0 : 1) + (odd_sol.empty() ? 0 : 1);
  return res;
}

ExtensionResult solve_noncentral(const ExtensionProblem& problem) {
  auto binds = generic_bindings(problem.base, 3);
  SolveOnce first = solve_instance(problem, binds[0]);
  for (int t = 1; t < 3; ++t) {
    SolveOnce check = solve_instance(problem, binds[t]);
    if (check.h2 != first.h2 || check.z2.size() != first.z2.size())
      throw std::runtime_error("solve_noncentral: instantiation cross-check disagrees");
  }
  ExtensionResult res;
  res.z2_basis = first.z2;
  res.b2_basis = first.b2;
  res.h2_dim = first.h2;
  if (problem.ext_generators.empty()) res.extended = problem.base;
  return res;
}

LieAlgebra assemble_extension(const ExtensionProblem& problem, const TwoCochain& cochain) {
  const int n = problem.base.dim();
  const int A = static_cast<int>(problem.ext_generators.size());
  std::vector<GeneratorMeta> gens = problem.base.generators;
  gens.insert(gens.end(), problem.ext_generators.begin(), problem.ext_generators.end());
  StructureTensor t(n + A);
  for (auto& [idx, c] : problem.base.tensor.entries) {
    auto [i, j, k] = idx;
    t.set(i, j, k, c);
  }
  for (auto& [ij, v] : cochain.values)
    for (int a = 0; a < A; ++a)
      if (v[a] != 0) t.add(ij.first, ij.second, n + a, ParamPoly(v[a]));
  for (auto& [ib, v] : problem.action.entries)
    for (int s = 0; s < A; ++s)
      if (v[s] != 0) t.add(ib.first, n + ib.second, n + s, ParamPoly(v[s]));
  return build(std::move(gens), std::move(t), problem.base.param_values, JacobiPolicy::Strict);
}

TwoCochain coboundary1(const ExtensionProblem& problem, const RatMat& beta) {
  const int n = problem.base.dim();
  const int A = static_cast<int>(problem.ext_generators.size());
  TwoCochain d;
  d.base_dim = n;
  d.ext_dim = A;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatVec v(A, Rat(0));
      // rho(X_i) beta(X_j) - rho(X_j) beta(X_i)
      for (int s = 0; s < A; ++s)
        for (int b = 0; b < A; ++b) {
          v[s] += problem.action.get(i, b)[s] * beta[b][j];
          v[s] -= problem.action.get(j, b)[s] * beta[b][i];
        }
      // - beta([X_i, X_j]) (Chevalley-Eilenberg sign; pairs with the closure
      // convention so that d(d beta) = 0 for any representation).
      for (int k = 0; k < n; ++k) {
        ParamPoly c = problem.base.tensor.get(i, j, k);
        if (c.is_zero()) continue;
        Rat cv = problem.base.resolve(c).constant_value();
        for (int s = 0; s < A; ++s) v[s] -= cv * beta[s][k];
      }
      d.set(i, j, v);
    }
  return d;
}

std::map<std::tuple<int, int, int>, RatVec> coboundary2(const ExtensionProblem& problem,
                                                        const TwoCochain& c) {
  const int n = problem.base.dim();
  const int A = static_cast<int>(problem.ext_generators.size());
  std::map<std::tuple<int, int, int>, RatVec> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        RatVec v(A, Rat(0));
        auto add_rho = [&](int x, RatVec w, const Rat& sgn) {
          for (int s = 0; s < A; ++s)
            for (int b = 0; b < A; ++b) v[s] += sgn * problem.action.get(x, b)[s] * w[b];
        };
        add_rho(i, c.get(j, k), Rat(1));
        add_rho(j, c.get(i, k), Rat(-1));
        add_rho(k, c.get(i, j), Rat(1));
        for (int r = 0; r < n; ++r) {
          auto coef = [&](int a, int b) {
            ParamPoly p = problem.base.tensor.get(a, b, r);
            return p.is_zero() ? Rat(0) : problem.base.resolve(p).constant_value();
          };
          Rat cjk = coef(j, k), cki = coef(k, i), cij = coef(i, j);
          RatVec dir = c.get(i, r), djr = c.get(j, r), dkr = c.get(k, r);
          for (int s = 0; s < A; ++s)
            v[s] += dir[s] * cjk + djr[s] * cki + dkr[s] * cij;
        }
        out[{i, j, k}] = v;
      }
  return out;
}

bool cochain_in_span(const std::vector<TwoCochain>& basis, const TwoCochain& c) {
  std::vector<RatVec> span;
  for (auto& b : basis) span.push_back(flatten(b));
  return rat_in_span(span, flatten(c));
}

ParamRelationFamily relation_family(int lambda, int beta_sign) {
  if (lambda != 0 && lambda != 1) throw std::invalid_argument("relation_family: lambda must be 0 or 1");
  if (beta_sign < -1 || beta_sign > 1) throw std::invalid_argument("relation_family: beta sign must be -1, 0 or +1");
  ParamRelationFamily f;
  if (lambda == 1 && beta_sign != 0) {
    f.alpha_free = true;
    f.mu_over_alpha = Rat(-beta_sign);
    f.description = beta_sign > 0 ? "mu = -alpha" : "mu = +alpha";
  } else if (lambda == 1 && beta_sign == 0) {
    f.alpha_zero = true;
    f.mu_free = true;
    f.description = "alpha = 0, mu free";
  } else if (lambda == 0 && beta_sign != 0) {
    f.mu_zero = true;
    f.alpha_free = true;
    f.description = "mu = 0, alpha free";
  } else {
    f.mu_free = true;
    f.alpha_free = true;
    f.description = "mu and alpha free";
  }
  return f;
}

ParamRelationFamily check_parameter_relation(const Rat& mu, const Rat& alpha, int lambda,
                                             int beta_sign) {
  ParamRelationFamily f = relation_family(lambda, beta_sign);
  bool ok = true;
  if (f.mu_zero && mu != 0) ok = false;
  if (f.alpha_zero && alpha != 0) ok = false;
  if (!f.mu_free && !f.mu_zero && !f.alpha_zero && mu != f.mu_over_alpha * alpha) ok = false;
  if (!ok) {
    std::ostringstream os;
    os << "check_parameter_relation: (mu=" << mu.str() << ", alpha=" << alpha.str()
       << ") violates " << f.description;
    throw std::invalid_argument(os.str());
  }
  return f;
}

// ---------------------------------------------------------------------------
// Extended-algebra catalog.

namespace {

const Dim kJ{0, 0, 0}, kK{-1, 1, 0}, kP{-1, 0, 0}, kH{0, -1, 0};
const Dim kM{-2, 1, 0}, kS{0, 0, 0}, kF{-1, -1, 0}, kPi{-1, 0, 0};
const Dim kB{-2, 0, 0}, kLam{-2, -1, 0}, kMp{-2, 1, 0}, kKh{-2, -1, 0};

struct Builder {
  std::vector<GeneratorMeta> gens;
  StructureTensor t;
  explicit Builder(std::vector<GeneratorMeta> g) : gens(std::move(g)), t((int)gens.size()) {}
  int idx(const std::string& n) const {
    for (size_t i = 0; i < gens.size(); ++i)
      if (gens[i].name == n) return (int)i;
    throw std::logic_error("Builder: no generator " + n);
  }
  void set(const std::string& a, const std::string& b, const std::string& c, ParamPoly v) {
    t.set(idx(a), idx(b), idx(c), std::move(v));
  }
  // [J,V1] = V2, [J,V2] = -V1
  void rot(const std::string& v) {
    set("J", v + "1", v + "2", ParamPoly(Rat(1)));
    set("J", v + "2", v + "1", ParamPoly(Rat(-1)));
  }
  LieAlgebra done() { return build(gens, std::move(t), {}, JacobiPolicy::Strict); }
};

LieAlgebra aniso_family(const std::string& which, int sign) {
  Builder b({{"K1", kK}, {"K2", kK}, {"P1", kP}, {"P2", kP}, {"H", kH}, {"M", kM}, {"S", kS}});
  b.set("K1", "P1", "M", ParamPoly(Rat(1)));
  b.set("K2", "P2", "M", ParamPoly(Rat(1)));
  if (which == "NH") {
    b.set("K1", "K2", "S", g_inv_c2());
    b.set("P1", "P2", "S", kappa2() * Rat(-sign));  // Jacobi ties this to [K,K]
    b.set("K1", "H", "P1", ParamPoly(Rat(1)));
    b.set("K2", "H", "P2", ParamPoly(Rat(1)));
    b.set("P1", "H", "K1", omega2() * Rat(sign));
    b.set("P2", "H", "K2", omega2() * Rat(sign));
  } else if (which == "G") {
    b.set("K1", "K2", "S", g_inv_c2());
    b.set("K1", "H", "P1", ParamPoly(Rat(1)));
    b.set("K2", "H", "P2", ParamPoly(Rat(1)));
  } else if (which == "G'") {
    b.set("P1", "P2", "S", kappa2());
    b.set("P1", "H", "K1", omega2() * Rat(sign));
    b.set("P2", "H", "K2", omega2() * Rat(sign));
  } else {  // St
    b.set("K1", "K2", "S", g_inv_c2());
    b.set("P1", "P2", "S", kappa2());
  }
  return b.done();
}

LieAlgebra make_aniso_carroll() {
  Builder b({{"K1", kK}, {"K2", kK}, {"P1", kP}, {"P2", kP}, {"H", kH}, {"S", kS}});
  b.set("K1", "K2", "S", g_inv_c2());
  b.set("K1", "P1", "H", g_inv_c2());
  b.set("K2", "P2", "H", g_inv_c2());
  b.set("P1", "P2", "S", kappa2());
  return b.done();
}

LieAlgebra make_aristotle_central() {
  Builder b({{"J", kJ}, {"P1", kP}, {"P2", kP}, {"H", kH}, {"S", kS}});
  b.rot("P");
  b.set("P1", "P2", "S", kappa2());
  return b.done();
}

LieAlgebra make_aristotle_noncentral() {
  Builder b({{"J", kJ}, {"P1", kP}, {"P2", kP}, {"F1", kF}, {"F2", kF}, {"H", kH}, {"S", kS}, {"K", kKh}});
  b.rot("P");
  b.rot("F");
  b.set("P1", "P2", "S", kappa2());
  b.set("P1", "H", "F1", ParamPoly(Rat(1)));
  b.set("P2", "H", "F2", ParamPoly(Rat(1)));
  b.set("P1", "F1", "K", ParamPoly(Rat(1)));
  b.set("P2", "F2", "K", ParamPoly(Rat(1)));
  return b.done();
}

LieAlgebra make_nc_galilei() {
  Builder b({{"J", kJ}, {"F1", kF}, {"K1", kK}, {"P1", kP}, {"K2", kK}, {"P2", kP}, {"F2", kF},
             {"H", kH}, {"M", kM}, {"S", kS}});
  b.rot("F");
  b.rot("K");
  b.rot("P");
  b.set("K1", "K2", "S", g_inv_c2());
  b.set("K1", "P1", "M", ParamPoly(Rat(1)));
  b.set("K2", "P2", "M", ParamPoly(Rat(1)));
  b.set("K1", "H", "P1", ParamPoly(Rat(1)));
  b.set("K2", "H", "P2", ParamPoly(Rat(1)));
  b.set("P1", "H", "F1", ParamPoly(Rat(1)));
  b.set("P2", "H", "F2", ParamPoly(Rat(1)));
  return b.done();
}

LieAlgebra make_nc_nh(int sign) {
  Builder b({{"J", kJ}, {"K1", kK}, {"K2", kK}, {"P1", kP}, {"P2", kP}, {"H", kH}, {"M", kM}, {"S", kS}});
  b.rot("K");
  b.rot("P");
  b.set("K1", "K2", "S", g_inv_c2());
  b.set("K1", "P1", "M", ParamPoly(Rat(1)));
  b.set("K2", "P2", "M", ParamPoly(Rat(1)));
  b.set("P1", "P2", "S", kappa2() * Rat(-sign));
  b.set("K1", "H", "P1", ParamPoly(Rat(1)));
  b.set("K2", "H", "P2", ParamPoly(Rat(1)));
  b.set("P1", "H", "K1", omega2() * Rat(sign));
  b.set("P2", "H", "K2", omega2() * Rat(sign));
  return b.done();
}

LieAlgebra make_nc_paragalilei(int sign) {
  Builder b({{"J", kJ}, {"Pi1", kPi}, {"K1", kK}, {"P1", kP}, {"K2", kK}, {"P2", kP}, {"Pi2", kPi},
             {"H", kH}, {"M", kM}, {"S", kS}});
  b.rot("Pi");
  b.rot("K");
  b.rot("P");
  b.set("K1", "P1", "M", ParamPoly(Rat(1)));
  b.set("K2", "P2", "M", ParamPoly(Rat(1)));
  b.set("P1", "P2", "S", kappa2());
  b.set("K1", "H", "Pi1", ParamPoly(Rat(1)));
  b.set("K2", "H", "Pi2", ParamPoly(Rat(1)));
  b.set("P1", "H", "K1", omega2() * Rat(sign));
  b.set("P2", "H", "K2", omega2() * Rat(sign));
  return b.done();
}

LieAlgebra make_nc_static() {
  Builder b({{"J", kJ}, {"P1", kP}, {"P2", kP}, {"K1", kK}, {"K2", kK}, {"F1", kF}, {"F2", kF},
             {"Pi1", kPi}, {"Pi2", kPi}, {"H", kH}, {"M", kM}, {"B", kB}, {"Lam", kLam}, {"Mp", kMp}});
  b.rot("P");
  b.rot("K");
  b.rot("F");
  b.rot("Pi");
  b.set("K1", "P1", "M", ParamPoly(Rat(1)));
  b.set("K2", "P2", "M", ParamPoly(Rat(1)));
  b.set("K1", "F1", "B", ParamPoly(Rat(1)));
  b.set("K2", "F2", "B", ParamPoly(Rat(1)));
  b.set("P1", "F1", "Lam", ParamPoly(Rat(1)));
  b.set("P2", "F2", "Lam", ParamPoly(Rat(1)));
  b.set("K1", "Pi1", "Mp", ParamPoly(Rat(1)));
  b.set("K2", "Pi2", "Mp", ParamPoly(Rat(1)));
  b.set("P1", "Pi1", "B", ParamPoly(Rat(1)));
  b.set("P2", "Pi2", "B", ParamPoly(Rat(1)));
  b.set("K1", "H", "Pi1", ParamPoly(Rat(1)));
  b.set("K2", "H", "Pi2", ParamPoly(Rat(1)));
  b.set("P1", "H", "F1", ParamPoly(Rat(1)));
  b.set("P2", "H", "F2", ParamPoly(Rat(1)));
  return b.done();
}

LieAlgebra make_nh1d(int sign) {
  Builder b({{"K", kK}, {"P", kP}, {"H", kH}, {"M", kM}});
  b.set("K", "H", "P", ParamPoly(Rat(1)));
  b.set("P", "H", "K", omega2() * Rat(sign));
  b.set("K", "P", "M", ParamPoly(Rat(1)));
  return b.done();
}

LieAlgebra make_nh3d(int sign) {
  Builder b({{"K1", kK}, {"K2", kK}, {"K3", kK}, {"P1", kP}, {"P2", kP}, {"P3", kP}, {"H", kH},
             {"M", kM}, {"J1", kJ}, {"J2", kJ}, {"J3", kJ}});
  // [K_i,K_j] = (kappa^2/omega^2) J_k eps_kij, [P_i,P_j] = -sign kappa^2 J_k eps_kij
  const int perm[3][2] = {{0, 1}, {1, 2}, {2, 0}};  // (i,j) with eps_kij = +1, k = 3rd index
  for (int a = 0; a < 3; ++a) {
    int i = perm[a][0], j = perm[a][1], k = 3 - i - j;
    std::string Ki = "K" + std::to_string(i + 1), Kj = "K" + std::to_string(j + 1);
    std::string Pi = "P" + std::to_string(i + 1), Pj = "P" + std::to_string(j + 1);
    std::string Jk = "J" + std::to_string(k + 1);
    b.set(Ki, Kj, Jk, g_inv_c2());
    b.set(Pi, Pj, Jk, kappa2() * Rat(-sign));
  }
  for (int i = 1; i <= 3; ++i) {
    std::string K = "K" + std::to_string(i), P = "P" + std::to_string(i);
    b.set(K, P, "M", ParamPoly(Rat(1)));
    b.set(K, "H", P, ParamPoly(Rat(1)));
    b.set(P, "H", K, omega2() * Rat(sign));
  }
  return b.done();
}

}  // namespace

const std::vector<std::string>& extended_catalog_names() {
  static const std::vector<std::string> names = {
      "anisoNH+", "anisoNH-", "anisoG",  "anisoG'+", "anisoG'-", "anisoSt", "anisoC",
      "aristotleCentral", "aristotleNoncentral", "ncGalilei", "ncNH+", "ncNH-",
      "ncParaGalilei+", "ncParaGalilei-", "ncStatic", "NH1D+", "NH1D-", "NH3D+", "NH3D-"};
  return names;
}

LieAlgebra build_extended_catalog(const std::string& name) {
  if (name == "anisoNH+") return aniso_family("NH", +1);
  if (name == "anisoNH-") return aniso_family("NH", -1);
  if (name == "anisoG") return aniso_family("G", 0);
  if (name == "anisoG'+") return aniso_family("G'", +1);
  if (name == "anisoG'-") return aniso_family("G'", -1);
  if (name == "anisoSt") return aniso_family("St", 0);
  if (name == "anisoC") return make_aniso_carroll();
  if (name == "aristotleCentral") return make_aristotle_central();
  if (name == "aristotleNoncentral") return make_aristotle_noncentral();
  if (name == "ncGalilei") return make_nc_galilei();
  if (name == "ncNH+") return make_nc_nh(+1);
  if (name == "ncNH-") return make_nc_nh(-1);
  if (name == "ncParaGalilei+") return make_nc_paragalilei(+1);
  if (name == "ncParaGalilei-") return make_nc_paragalilei(-1);
  if (name == "ncStatic") return make_nc_static();
  if (name == "NH1D+") return make_nh1d(+1);
  if (name == "NH1D-") return make_nh1d(-1);
  if (name == "NH3D+") return make_nh3d(+1);
  if (name == "NH3D-") return make_nh3d(-1);
  throw std::domain_error("build_extended_catalog: unknown name " + name);
}

std::pair<ExtensionProblem, TwoCochain> extension_problem_for(const std::string& name) {
  LieAlgebra full = build_extended_catalog(name);
  // Split the full algebra into base generators and extension generators: the
  // extension part never appears as the *first* slot of a bracket with a base
  // element producing base output, and is read off the catalog layout.
  std::map<std::string, std::vector<std::string>> ext_names = {
      {"anisoNH+", {"M", "S"}},       {"anisoNH-", {"M", "S"}},
      {"anisoG", {"M", "S"}},         {"anisoG'+", {"M", "S"}},
      {"anisoG'-", {"M", "S"}},       {"anisoSt", {"M", "S"}},
      {"anisoC", {"S"}},              {"aristotleCentral", {"S"}},
      {"aristotleNoncentral", {"S", "K", "F1", "F2"}},
      {"ncGalilei", {"M", "S", "F1", "F2"}},
      {"ncNH+", {"M", "S"}},          {"ncNH-", {"M", "S"}},
      {"ncParaGalilei+", {"M", "S", "Pi1", "Pi2"}},
      {"ncParaGalilei-", {"M", "S", "Pi1", "Pi2"}},
      {"ncStatic", {"M", "B", "Lam", "Mp", "F1", "F2", "Pi1", "Pi2"}},
      {"NH1D+", {"M"}},               {"NH1D-", {"M"}},
      {"NH3D+", {"M", "J1", "J2", "J3"}}, {"NH3D-", {"M", "J1", "J2", "J3"}}};
  auto it = ext_names.find(name);
  if (it == ext_names.end()) throw std::domain_error("extension_problem_for: unknown name " + name);
  std::vector<int> ext_idx;
  for (auto& en : it->second) ext_idx.push_back(full.index_of(en));
  std::vector<bool> is_ext(full.dim(), false);
  for (int e : ext_idx) is_ext[e] = true;

  ExtensionProblem prob;
  std::vector<int> base_map(full.dim(), -1), ext_map(full.dim(), -1);
  for (int i = 0; i < full.dim(); ++i) {
    if (is_ext[i]) {
      ext_map[i] = static_cast<int>(prob.ext_generators.size());
      prob.ext_generators.push_back(full.generators[i]);
    } else {
      base_map[i] = static_cast<int>(prob.base.generators.size());
      prob.base.generators.push_back(full.generators[i]);
    }
  }
  const int nb = prob.base.dim();
  const int na = static_cast<int>(prob.ext_generators.size());
  prob.base.tensor = StructureTensor(nb);
  prob.action.base_dim = nb;
  prob.action.ext_dim = na;
  TwoCochain coc;
  coc.base_dim = nb;
  coc.ext_dim = na;
  // Cochain and action values are exact rationals once the physical symbols
  // are bound; the canonical binding below is the one the solver tests use.
  std::map<std::string, Rat> bind = {{"omega", Rat(2)}, {"kappa", Rat(3)}};
  for (auto& [idx, c] : full.tensor.entries) {
    auto [i, j, k] = idx;
    if (!is_ext[i] && !is_ext[j] && !is_ext[k]) {
      prob.base.tensor.set(base_map[i], base_map[j], base_map[k], ParamPoly(c.evaluate(bind)));
    } else if (!is_ext[i] && !is_ext[j] && is_ext[k]) {
      RatVec v = coc.get(base_map[i], base_map[j]);
      v[ext_map[k]] += c.evaluate(bind);
      coc.set(base_map[i], base_map[j], v);
    } else if (!is_ext[i] && is_ext[j] && is_ext[k]) {
      RatVec v = prob.action.get(base_map[i], ext_map[j]);
      v[ext_map[k]] += c.evaluate(bind);
      prob.action.set(base_map[i], ext_map[j], v);
    } else if (is_ext[i] && !is_ext[j] && is_ext[k]) {
      RatVec v = prob.action.get(base_map[j], ext_map[i]);
      v[ext_map[k]] -= c.evaluate(bind);
      prob.action.set(base_map[j], ext_map[i], v);
    } else {
      throw std::logic_error("extension_problem_for: extension must be abelian");
    }
  }
  prob.base.param_values = bind;
  return {prob, coc};
}

}  // namespace kinekit

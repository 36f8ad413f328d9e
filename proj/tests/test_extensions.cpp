#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kinekit/catalog.hpp"
#include "kinekit/extensions.hpp"

using namespace kinekit;

namespace {

ExtensionProblem abstract_central(const LieAlgebra& base, int ext_dim = 1) {
  ExtensionProblem p;
  p.base = base;
  for (int i = 0; i < ext_dim; ++i) p.ext_generators.push_back({"Y" + std::to_string(i + 1), {}});
  p.action.base_dim = base.dim();
  p.action.ext_dim = ext_dim;
  return p;
}

LieAlgebra abelian(int n) {
  std::vector<GeneratorMeta> gens;
  for (int i = 0; i < n; ++i) gens.push_back({"X" + std::to_string(i + 1), {}});
  return build(gens, StructureTensor(n));
}

}  // namespace

TEST_CASE("raw second cohomology of the planar kinematical algebra with boosts is 3") {
  auto res = solve_central(abstract_central(catalog_entry("G").algebra), false);
  CHECK(res.h2_dim == 3);
}

TEST_CASE("raw second cohomology of an abelian algebra is n(n-1)/2") {
  for (int n : {2, 3, 4, 5}) {
    auto res = solve_central(abstract_central(abelian(n)), false);
    CHECK(res.h2_dim == n * (n - 1) / 2);
    CHECK(res.b2_basis.empty());
  }
}

TEST_CASE("equivariant solve returns two extension generators for each flat-space row") {
  for (auto name : {"NH+", "NH-", "G", "G'+", "G'-", "St"}) {
    CatalogEntry e = catalog_entry(name);
    REQUIRE(e.anisotropic);
    auto res = solve_central(abstract_central(*e.anisotropic), true);
    REQUIRE(res.generator_count);
    CHECK(*res.generator_count == 2);
  }
}

TEST_CASE("parameter relation families") {
  auto f1 = check_parameter_relation(Rat(3), Rat(-3), 1, +1);
  CHECK(f1.mu_over_alpha == Rat(-1));
  auto f2 = check_parameter_relation(Rat(3), Rat(3), 1, -1);
  CHECK(f2.mu_over_alpha == Rat(1));
  auto f3 = check_parameter_relation(Rat(5), Rat(0), 1, 0);
  CHECK(f3.alpha_zero);
  CHECK(f3.mu_free);
  auto f4 = check_parameter_relation(Rat(0), Rat(7), 0, +1);
  CHECK(f4.mu_zero);
  CHECK(f4.alpha_free);
  auto f5 = check_parameter_relation(Rat(2), Rat(7), 0, 0);
  CHECK(f5.mu_free);
  CHECK(f5.alpha_free);
  CHECK_THROWS_AS(check_parameter_relation(Rat(1), Rat(1), 1, +1), std::invalid_argument);
  CHECK_THROWS_AS(relation_family(2, 0), std::invalid_argument);
}

TEST_CASE("every extended catalog algebra passes the strict checks") {
  for (auto& name : extended_catalog_names()) {
    LieAlgebra alg = build_extended_catalog(name);
    CHECK(jacobi_check(alg).ok);
    CHECK(dimension_audit(alg).empty());
  }
  CHECK_THROWS_AS(build_extended_catalog("nope"), std::domain_error);
}

TEST_CASE("named extended brackets: boost-sector, Carroll and force rows") {
  LieAlgebra g = build_extended_catalog("anisoG");
  CHECK(g.tensor.get(g.index_of("K1"), g.index_of("H"), g.index_of("P1")) == ParamPoly(Rat(1)));
  CHECK(g.tensor.get(g.index_of("K1"), g.index_of("K2"), g.index_of("S")) ==
        ParamPoly(ParamMonomial(Rat(1), {{"kappa", 2}, {"omega", -2}})));
  CHECK(g.tensor.get(g.index_of("K1"), g.index_of("P1"), g.index_of("M")) == ParamPoly(Rat(1)));
  CHECK(g.tensor.get(g.index_of("P1"), g.index_of("P2"), g.index_of("S")).is_zero());

  LieAlgebra c = build_extended_catalog("anisoC");
  CHECK(c.tensor.get(c.index_of("K1"), c.index_of("K2"), c.index_of("S")) ==
        ParamPoly(ParamMonomial(Rat(1), {{"kappa", 2}, {"omega", -2}})));
  CHECK(c.tensor.get(c.index_of("K1"), c.index_of("P1"), c.index_of("H")) ==
        ParamPoly(ParamMonomial(Rat(1), {{"kappa", 2}, {"omega", -2}})));
  CHECK(c.tensor.get(c.index_of("P1"), c.index_of("P2"), c.index_of("S")) ==
        ParamPoly(ParamMonomial(Rat(1), {{"kappa", 2}})));

  LieAlgebra ar = build_extended_catalog("aristotleNoncentral");
  CHECK(ar.tensor.get(ar.index_of("P1"), ar.index_of("H"), ar.index_of("F1")) ==
        ParamPoly(Rat(1)));
  CHECK(ar.tensor.get(ar.index_of("P1"), ar.index_of("F1"), ar.index_of("K")) ==
        ParamPoly(Rat(1)));
  CHECK(ar.tensor.get(ar.index_of("P2"), ar.index_of("F1"), ar.index_of("K")).is_zero());
}

TEST_CASE("catalog cochains lie in the solution space of the matching solve") {
  for (auto name : {"anisoNH-", "anisoNH+", "anisoG", "anisoG'+", "anisoSt", "anisoC",
                    "aristotleCentral", "NH1D-", "NH3D-"}) {
    auto [prob, cochain] = extension_problem_for(name);
    auto res = solve_central(prob, false);
    CHECK(cochain_in_span(res.z2_basis, cochain));
    LieAlgebra ext = assemble_extension(prob, cochain);
    CHECK(jacobi_check(ext).ok);
  }
}

TEST_CASE("noncentral solves contain the printed bracket sets") {
  for (auto name : {"ncGalilei", "ncParaGalilei+", "ncParaGalilei-", "ncStatic",
                    "aristotleNoncentral"}) {
    auto [prob, cochain] = extension_problem_for(name);
    auto res = solve_noncentral(prob);
    CHECK(cochain_in_span(res.z2_basis, cochain));
    LieAlgebra ext = assemble_extension(prob, cochain);
    CHECK(jacobi_check(ext).ok);
  }
}

TEST_CASE("the force cochain appears in the momentum-time slot of the Galilei solve") {
  auto [prob, cochain] = extension_problem_for("ncGalilei");
  int P1 = prob.base.index_of("P1"), H = prob.base.index_of("H");
  int F1 = -1;
  for (size_t i = 0; i < prob.ext_generators.size(); ++i)
    if (prob.ext_generators[i].name == "F1") F1 = static_cast<int>(i);
  REQUIRE(F1 >= 0);
  CHECK(cochain.get(P1, H)[F1] == Rat(1));
}

TEST_CASE("trivial problem: no extension generators") {
  ExtensionProblem prob;
  prob.base = catalog_entry("G").algebra;
  prob.action.base_dim = prob.base.dim();
  prob.action.ext_dim = 0;
  auto res = solve_noncentral(prob);
  CHECK(res.z2_basis.empty());
  CHECK(res.b2_basis.empty());
  REQUIRE(res.extended);
  CHECK(res.extended->tensor == prob.base.tensor);
}

TEST_CASE("coboundary of a coboundary vanishes") {
  std::mt19937_64 rng(11);
  for (auto name : {"ncGalilei", "ncStatic"}) {
    auto [prob, cochain] = extension_problem_for(name);
    const int n = prob.base.dim();
    const int A = static_cast<int>(prob.ext_generators.size());
    for (int trial = 0; trial < 5; ++trial) {
      RatMat beta(A, RatVec(n, Rat(0)));
      for (auto& row : beta)
        for (auto& c : row) c = random_rat(rng);
      TwoCochain d1 = coboundary1(prob, beta);
      auto d2 = coboundary2(prob, d1);
      for (auto& [triple, v] : d2)
        for (auto& c : v) CHECK(c == Rat(0));
    }
  }
}

TEST_CASE("class membership is unchanged by coboundary shifts") {
  auto [prob, cochain] = extension_problem_for("ncGalilei");
  auto res = solve_noncentral(prob);
  std::mt19937_64 rng(3);
  const int n = prob.base.dim();
  const int A = static_cast<int>(prob.ext_generators.size());
  RatMat beta(A, RatVec(n, Rat(0)));
  for (auto& row : beta)
    for (auto& c : row) c = random_rat(rng);
  TwoCochain shift = coboundary1(prob, beta);
  TwoCochain shifted = cochain;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatVec v = shifted.get(i, j), w = shift.get(i, j);
      for (int a = 0; a < A; ++a) v[a] += w[a];
      shifted.set(i, j, v);
    }
  CHECK(cochain_in_span(res.z2_basis, shifted));
  // And the shift itself is a coboundary: in span(B2).
  CHECK(cochain_in_span(res.b2_basis, shift));
}

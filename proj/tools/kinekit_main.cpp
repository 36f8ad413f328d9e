// kinekit: planar kinematical algebras, their extensions, coadjoint orbits
// and noncommutative phase-space dynamics from one command line.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "kinekit/catalog.hpp"
#include "kinekit/coadjoint.hpp"
#include "kinekit/deformation.hpp"
#include "kinekit/extensions.hpp"
#include "kinekit/invariants.hpp"
#include "kinekit/json_io.hpp"
#include "kinekit/kirillov.hpp"
#include "kinekit/nc_mechanics.hpp"
#include "kinekit/report.hpp"

namespace {

using namespace kinekit;

Json load_json(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  Json j;
  is >> j;
  return j;
}

Json parse_inline_or_file(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return Json::parse(arg);
  return load_json(arg);
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(1) << "\n";
  } else {
    std::ofstream os(out_path);
    os << j.dump(1) << "\n";
  }
}

std::map<std::string, Rat> rat_map(const Json& j) {
  std::map<std::string, Rat> m;
  for (auto& [k, v] : j.items()) m[k] = rat_from_json(v);
  return m;
}

LieAlgebra algebra_for_group(const std::string& name, const std::map<std::string, Rat>& params) {
  LieAlgebra alg = build_extended_catalog(name);
  alg.param_values = {{"omega", Rat(2)}, {"kappa", Rat(3)}};
  for (auto& [k, v] : params) alg.param_values[k] = v;
  return alg;
}

DualPoint point_from_json(const LieAlgebra& alg, const Json& j) {
  DualPoint p = DualPoint::zero(alg);
  for (auto& [k, v] : j.items()) p.set(k, rat_from_json(v));
  return p;
}

Json matrix_json(const RatMat& m) {
  Json out = Json::array();
  for (auto& row : m) {
    Json r = Json::array();
    for (auto& e : row) r.push_back(e.str());
    out.push_back(r);
  }
  return out;
}

unsigned env_seed() {
  const char* s = std::getenv("KINEKIT_SEED");
  return s ? static_cast<unsigned>(std::stoul(s)) : 17u;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"planar kinematical algebras, extensions, orbits and dynamics"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "write the main artifact here instead of stdout");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "classify a (lambda,gamma,beta) triple or an algebra file");
  int lambda = 1;
  std::string gamma = "0", beta = "0", algebra_path;
  classify_cmd->add_option("--lambda", lambda, "0 or 1");
  classify_cmd->add_option("--gamma", gamma, "0 or c-2");
  classify_cmd->add_option("--beta", beta, "-w2, 0 or +w2 (also -1/0/+1)");
  classify_cmd->add_option("--algebra", algebra_path, "JSON algebra to classify instead");

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "emit a catalog algebra as JSON");
  std::string cat_name = "G";
  bool cat_aniso = false;
  catalog_cmd->add_option("--name", cat_name, "dS+ P dS- NH+ G NH- P'+ C P'- G'+ G'- St");
  catalog_cmd->add_flag("--anisotropic", cat_aniso, "emit the rotationless reduction");

  // extend / h2
  auto* extend_cmd = app.add_subcommand("extend", "solve a central or noncentral extension problem");
  bool ext_central = false, ext_noncentral = false, ext_equivariant = false;
  std::string ext_algebra, ext_group;
  int ext_dim = 1;
  extend_cmd->add_flag("--central", ext_central);
  extend_cmd->add_flag("--noncentral", ext_noncentral);
  extend_cmd->add_flag("--equivariant", ext_equivariant);
  extend_cmd->add_option("--algebra", ext_algebra, "base algebra JSON (central solves)");
  extend_cmd->add_option("--ext-dim", ext_dim, "abstract central directions");
  extend_cmd->add_option("--group", ext_group, "extended catalog name (uses its base + action)");

  auto* h2_cmd = app.add_subcommand("h2", "second cohomology dimension of an algebra file");
  std::string h2_algebra;
  h2_cmd->add_option("--algebra", h2_algebra)->required();

  // kirillov
  auto* kir_cmd = app.add_subcommand("kirillov", "Kirillov matrix of a group or algebra");
  std::string kir_group, kir_algebra, kir_point, kir_params = "{}";
  kir_cmd->add_option("--group", kir_group, "extended catalog name");
  kir_cmd->add_option("--algebra", kir_algebra, "JSON algebra file");
  kir_cmd->add_option("--point", kir_point, "dual point JSON (inline or file)");
  kir_cmd->add_option("--params", kir_params, "parameter values JSON");

  // casimir
  auto* cas_cmd = app.add_subcommand("casimir", "invariant library + numeric search for a group");
  std::string cas_group;
  cas_cmd->add_option("--group", cas_group)->required();

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "restricted Kirillov matrix and its inverse");
  std::string orbit_group, orbit_chart, orbit_point, orbit_params = "{}";
  orbit_cmd->add_option("--group", orbit_group)->required();
  orbit_cmd->add_option("--chart", orbit_chart, "comma-separated dual labels (default per group)");
  orbit_cmd->add_option("--point", orbit_point, "dual point JSON");
  orbit_cmd->add_option("--params", orbit_params, "parameter values JSON");

  // coadjoint
  auto* coad_cmd = app.add_subcommand("coadjoint", "apply a group element to a dual point");
  std::string coad_group, coad_element, coad_point, coad_phys = "{}";
  coad_cmd->add_option("--group", coad_group)->required();
  coad_cmd->add_option("--element", coad_element, "group element JSON")->required();
  coad_cmd->add_option("--point", coad_point, "dual point JSON")->required();
  coad_cmd->add_option("--phys", coad_phys, "{\"omega\":..,\"kappa\":..}");

  // evolve
  auto* evolve_cmd = app.add_subcommand("evolve", "closed-form time evolution on the orbit chart");
  std::string ev_group, ev_state, ev_phys = "{}";
  double ev_t = 1.0;
  bool ev_csv = false;
  int ev_samples = 1;
  evolve_cmd->add_option("--group", ev_group)->required();
  evolve_cmd->add_option("--state", ev_state, "chart state JSON")->required();
  evolve_cmd->add_option("--t", ev_t)->required();
  evolve_cmd->add_option("--samples", ev_samples, "CSV rows from 0 to t");
  evolve_cmd->add_flag("--csv", ev_csv, "emit CSV instead of JSON");
  evolve_cmd->add_option("--phys", ev_phys);

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "propagate a phase-space model");
  std::string sim_model = "charged", sim_params = "{}", sim_state0, sim_method = "exact";
  double sim_tend = 1.0, sim_dt = 0.01;
  sim_cmd->add_option("--model", sim_model, "charged | dual-spring | pendulum | group:<name>");
  sim_cmd->add_option("--params", sim_params, "model parameters JSON");
  sim_cmd->add_option("--state0", sim_state0, "initial (q.., p..) JSON array");
  sim_cmd->add_option("--t-end", sim_tend);
  sim_cmd->add_option("--dt", sim_dt);
  sim_cmd->add_option("--method", sim_method, "exact | rk4");

  // deform
  auto* def_cmd = app.add_subcommand("deform", "classify a linear bracket deformation");
  std::string def_n = "0", def_d = "0", def_w = "0", def_m = "1";
  def_cmd->add_option("--n", def_n);
  def_cmd->add_option("--d", def_d);
  def_cmd->add_option("--w", def_w);
  def_cmd->add_option("--m", def_m);

  // report
  auto* rep_cmd = app.add_subcommand("report", "regenerate or check the golden fixtures");
  std::string rep_dir;
  bool rep_check = false;
  int rep_jobs = 1;
  rep_cmd->add_option("--dir", rep_dir, "fixture directory (default $KINEKIT_FIXTURES or ./fixtures)");
  rep_cmd->add_flag("--check", rep_check, "diff against the committed fixtures");
  rep_cmd->add_option("--jobs", rep_jobs, "render fixture sections concurrently");

  CLI11_PARSE(app, argc, argv);

  if (*classify_cmd) {
    ClassifyResult res;
    Json out;
    if (!algebra_path.empty()) {
      LieAlgebra alg = algebra_from_json(load_json(algebra_path), JacobiPolicy::Skip);
      res = classify(alg);
    } else {
      KinematicalParams p;
      p.lambda = lambda;
      p.gamma_inv_c2 = (gamma == "c-2" || gamma == "1/c2" || gamma == "c^-2");
      p.beta_sign = (beta == "+w2" || beta == "+1" || beta == "1") ? 1
                    : (beta == "-w2" || beta == "-1")              ? -1
                                                                   : 0;
      CatalogEntry e = build_kinematical(p);
      res = {e.name, e.params, e.attributes};
      out["algebra"] = algebra_to_json(e.algebra);
    }
    out["name"] = res.name;
    out["absolute_time"] = res.attributes.absolute_time;
    out["absolute_space"] = res.attributes.absolute_space;
    out["cosmological"] = res.attributes.cosmological;
    emit(out, out_path);
  } else if (*catalog_cmd) {
    CatalogEntry e = catalog_entry(cat_name);
    if (cat_aniso) {
      if (!e.anisotropic) throw std::domain_error("no rotationless reduction for " + cat_name);
      emit(algebra_to_json(*e.anisotropic), out_path);
    } else {
      emit(algebra_to_json(e.algebra), out_path);
    }
  } else if (*extend_cmd) {
    ExtensionResult res;
    if (!ext_group.empty()) {
      auto [prob, coc] = extension_problem_for(ext_group);
      res = prob.action.is_zero() && !ext_noncentral ? solve_central(prob, ext_equivariant)
                                                     : solve_noncentral(prob);
      res.extended = assemble_extension(prob, coc);
    } else {
      if (ext_algebra.empty()) throw std::invalid_argument("extend: need --algebra or --group");
      ExtensionProblem prob;
      prob.base = algebra_from_json(load_json(ext_algebra), JacobiPolicy::Skip);
      for (int i = 0; i < ext_dim; ++i) prob.ext_generators.push_back({"Y" + std::to_string(i + 1), {0, 0, 0}});
      prob.action.base_dim = prob.base.dim();
      prob.action.ext_dim = ext_dim;
      res = solve_central(prob, ext_equivariant);
    }
    Json out;
    out["z2_dim"] = static_cast<int>(res.z2_basis.size());
    out["b2_dim"] = static_cast<int>(res.b2_basis.size());
    out["h2_dim"] = res.h2_dim;
    if (res.generator_count) out["generator_count"] = *res.generator_count;
    Json basis = Json::array();
    for (auto& c : res.z2_basis) {
      Json entries = Json::array();
      for (auto& [ij, v] : c.values) {
        Json e;
        e["i"] = ij.first;
        e["j"] = ij.second;
        Json vals = Json::array();
        for (auto& r : v) vals.push_back(r.str());
        e["values"] = vals;
        entries.push_back(e);
      }
      basis.push_back(entries);
    }
    out["z2_basis"] = basis;
    if (res.extended) out["extended"] = algebra_to_json(*res.extended);
    emit(out, out_path);
  } else if (*h2_cmd) {
    ExtensionProblem prob;
    prob.base = algebra_from_json(load_json(h2_algebra), JacobiPolicy::Skip);
    prob.ext_generators.push_back({"Y", {0, 0, 0}});
    prob.action.base_dim = prob.base.dim();
    prob.action.ext_dim = 1;
    auto res = solve_central(prob, false);
    std::cout << res.h2_dim << "\n";
  } else if (*kir_cmd) {
    LieAlgebra alg = !kir_group.empty()
                         ? algebra_for_group(kir_group, rat_map(Json::parse(kir_params)))
                         : algebra_from_json(load_json(kir_algebra), JacobiPolicy::Skip);
    Json out;
    auto sym = kirillov_matrix_sym(alg);
    Json symj = Json::array();
    for (auto& row : sym) {
      Json r = Json::array();
      for (auto& e : row) r.push_back(e.str());
      symj.push_back(r);
    }
    out["symbolic"] = symj;
    if (!kir_point.empty()) {
      DualPoint p = point_from_json(alg, parse_inline_or_file(kir_point));
      out["numeric"] = matrix_json(kirillov_matrix(alg, p));
    }
    emit(out, out_path);
  } else if (*cas_cmd) {
    LieAlgebra alg = algebra_for_group(cas_group, {});
    Json out;
    Json lib = Json::array();
    for (auto& inv : invariant_library(cas_group)) {
      auto residual = casimir_residual_sym(alg, inv.polynomial);
      bool zero = true;
      for (auto& r : residual)
        if (!r.is_zero()) zero = false;
      lib.push_back({{"name", inv.name}, {"polynomial", inv.polynomial.str()}, {"verified", zero}});
    }
    out["library"] = lib;
    DualPoint ref = generic_point(alg, 5);
    std::vector<int> trivial_idx;
    auto trivial = trivial_coordinates(alg);
    for (int i = 0; i < alg.dim(); ++i)
      if (std::find(trivial.begin(), trivial.end(), ref.labels[i]) != trivial.end())
        trivial_idx.push_back(i);
    auto found = find_casimirs(alg, ref, 2, trivial_idx, env_seed());
    out["numeric_solution_dim"] = found.solution_dim;
    out["numeric_stable"] = found.stable;
    emit(out, out_path);
  } else if (*orbit_cmd) {
    LieAlgebra alg = algebra_for_group(orbit_group, rat_map(Json::parse(orbit_params)));
    std::vector<std::string> chart;
    if (orbit_chart.empty()) {
      chart = default_chart(orbit_group);
    } else {
      std::stringstream ss(orbit_chart);
      std::string item;
      while (std::getline(ss, item, ',')) chart.push_back(item);
    }
    DualPoint p = orbit_point.empty() ? generic_point(alg, 5)
                                      : point_from_json(alg, parse_inline_or_file(orbit_point));
    OrbitChart c = restrict_and_invert(alg, p, chart);
    Json out;
    out["chart"] = c.labels;
    Json pt = Json::object();
    for (size_t i = 0; i < p.labels.size(); ++i) pt[p.labels[i]] = p.values[i].str();
    out["point"] = pt;
    out["omega"] = matrix_json(c.omega);
    out["theta"] = matrix_json(c.theta);
    out["sigma_coefficients"] = matrix_json(c.theta);  // sigma = 1/2 theta_ab dz_a ^ dz_b
    emit(out, out_path);
  } else if (*coad_cmd) {
    Json phys_j = Json::parse(coad_phys);
    Phys phys;
    if (phys_j.contains("omega")) phys.omega = phys_j["omega"].get<double>();
    if (phys_j.contains("kappa")) phys.kappa = phys_j["kappa"].get<double>();
    GroupElement g = group_identity(coad_group);
    Json ej = parse_inline_or_file(coad_element);
    auto names = group_param_names(coad_group);
    for (auto& [k, v] : ej.items()) {
      auto it = std::find(names.begin(), names.end(), k);
      if (it == names.end()) throw std::invalid_argument("unknown group parameter " + k);
      g.params[it - names.begin()] = v.get<double>();
    }
    Json pj = parse_inline_or_file(coad_point);
    StateMap state;
    for (auto& [k, v] : pj.items()) state[k] = v.get<double>();
    StateMap res = coadjoint_apply(g, state, phys);
    Json out = Json::object();
    for (auto& [k, v] : res) out[k] = v;
    emit(out, out_path);
  } else if (*evolve_cmd) {
    Json phys_j = Json::parse(ev_phys);
    Phys phys;
    if (phys_j.contains("omega")) phys.omega = phys_j["omega"].get<double>();
    if (phys_j.contains("kappa")) phys.kappa = phys_j["kappa"].get<double>();
    Json sj = parse_inline_or_file(ev_state);
    StateMap state;
    for (auto& [k, v] : sj.items()) state[k] = v.get<double>();
    if (ev_csv) {
      std::ostringstream os;
      os << "t";
      for (auto& [k, v] : state) os << "," << k;
      os << "\n";
      int rows = std::max(1, ev_samples);
      for (int i = 0; i <= rows; ++i) {
        double t = ev_t * i / rows;
        StateMap st = time_evolve(ev_group, state, t, phys);
        os << t;
        for (auto& [k, v] : st) os << "," << v;
        os << "\n";
      }
      if (out_path.empty())
        std::cout << os.str();
      else
        std::ofstream(out_path) << os.str();
    } else {
      StateMap res = time_evolve(ev_group, state, ev_t, phys);
      Json out = Json::object();
      for (auto& [k, v] : res) out[k] = v;
      emit(out, out_path);
    }
  } else if (*sim_cmd) {
    Json params = Json::parse(sim_params);
    auto getr = [&](const char* k, Rat dflt) {
      return params.contains(k) ? rat_from_json(params[k]) : dflt;
    };
    ModelSetup setup;
    if (sim_model == "charged") {
      setup = charged_particle(getr("m", Rat(1)), getr("e", Rat(1)), getr("B", Rat(1)),
                               {getr("E1", Rat(0)), getr("E2", Rat(0))});
    } else if (sim_model == "dual-spring") {
      setup = dual_spring(getr("C", Rat(1)), getr("estar", Rat(1)), getr("Bstar", Rat(1)),
                          {getr("Estar1", Rat(0)), getr("Estar2", Rat(0))});
    } else if (sim_model == "pendulum") {
      setup = pendulum(getr("m", Rat(1)), getr("ms", Rat(2)), getr("omega", Rat(1)),
                       {getr("E1", Rat(0)), getr("E2", Rat(0))},
                       {getr("Estar1", Rat(0)), getr("Estar2", Rat(0))});
    } else if (sim_model.rfind("group:", 0) == 0) {
      std::map<std::string, Rat> consts;
      for (auto& [k, v] : params.items()) consts[k] = rat_from_json(v);
      setup = group_model(sim_model.substr(6), consts);
    } else {
      throw std::invalid_argument("unknown model " + sim_model);
    }
    Eigen::VectorXd s0 = Eigen::VectorXd::Zero(2 * setup.model.n);
    if (!sim_state0.empty()) {
      Json sj = Json::parse(sim_state0);
      for (int i = 0; i < 2 * setup.model.n && i < static_cast<int>(sj.size()); ++i)
        s0(i) = sj[i].get<double>();
    } else {
      for (int i = 0; i < setup.model.n; ++i) s0(setup.model.n + i) = 1.0;  // unit momenta
    }
    Method method = (sim_method == "rk4") ? Method::RK4 : Method::Exact;
    Trajectory traj = propagate(setup.ps, setup.model, s0, sim_tend, method, sim_dt);
    std::ostringstream os;
    os << "t";
    for (int i = 0; i < setup.model.n; ++i) os << ",q" << i + 1;
    for (int i = 0; i < setup.model.n; ++i) os << ",p" << i + 1;
    os << ",H\n";
    os.precision(15);
    for (size_t i = 0; i < traj.times.size(); ++i) {
      os << traj.times[i];
      for (int c = 0; c < 2 * setup.model.n; ++c) os << "," << traj.states[i](c);
      os << "," << traj.energies[i] << "\n";
    }
    if (out_path.empty())
      std::cout << os.str();
    else
      std::ofstream(out_path) << os.str();
  } else if (*def_cmd) {
    auto c = classify_case(Rat(def_n), Rat(def_d), Rat(def_w), Rat(def_m));
    Json out;
    out["case"] = c.case_label;
    out["group"] = c.group;
    out["F"] = matrix_json(c.phase_space.F);
    out["G"] = matrix_json(c.phase_space.G);
    Json A = Json::array();
    for (int i = 0; i < c.motion_matrix.rows(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < c.motion_matrix.cols(); ++j) row.push_back(c.motion_matrix(i, j));
      A.push_back(row);
    }
    out["motion_matrix"] = A;
    emit(out, out_path);
  } else if (*rep_cmd) {
    std::string dir = rep_dir;
    if (dir.empty()) {
      const char* env = std::getenv("KINEKIT_FIXTURES");
      dir = env ? env : "fixtures";
    }
    if (rep_check) {
      auto bad = check_fixtures(dir);
      if (!bad.empty()) {
        for (auto& b : bad) std::cerr << "fixture mismatch: " << b << "\n";
        return 2;
      }
      std::cout << "fixtures match\n";
    } else {
      int nfiles = write_fixtures(dir, rep_jobs);
      std::cout << "wrote " << nfiles << " fixture files to " << dir << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#include "kinekit/report.hpp"

#include <filesystem>
#include <fstream>
#include <future>

#include "kinekit/catalog.hpp"
#include "kinekit/deformation.hpp"
#include "kinekit/extensions.hpp"
#include "kinekit/invariants.hpp"
#include "kinekit/json_io.hpp"
#include "kinekit/kirillov.hpp"

namespace kinekit {

namespace {

Json bracket_table(const LieAlgebra& alg) {
  Json rows = Json::array();
  for (auto& [idx, c] : alg.tensor.entries) {
    auto [i, j, k] = idx;
    Json r;
    r["lhs"] = "[" + alg.generators[i].name + "," + alg.generators[j].name + "]";
    r["rhs_gen"] = alg.generators[k].name;
    r["coeff"] = c.str();
    rows.push_back(r);
  }
  return rows;
}

Json matrix_sym(const std::vector<std::vector<ParamPoly>>& m) {
  Json out = Json::array();
  for (auto& row : m) {
    Json r = Json::array();
    for (auto& e : row) r.push_back(e.str());
    out.push_back(r);
  }
  return out;
}

Json matrix_rat(const RatMat& m) {
  Json out = Json::array();
  for (auto& row : m) {
    Json r = Json::array();
    for (auto& e : row) r.push_back(e.str());
    out.push_back(r);
  }
  return out;
}

/// Canonical reference point per catalog dual space: deterministic small
/// rationals avoiding every singular locus used by the displays.
DualPoint reference_point(const LieAlgebra& alg) {
  DualPoint p = DualPoint::zero(alg);
  // Fixed assignments by label; generic defaults for the rest.
  std::map<std::string, Rat> fixed = {
      {"m", Rat(3)},    {"h", Rat(5)},     {"mu", Rat(7)},  {"beta", Rat(2)},
      {"k", Rat(11)},   {"E", Rat(9, 2)},  {"j", Rat(4)},   {"h1", Rat(1, 2)},
      {"h2", Rat(1, 3)}, {"h3", Rat(1, 5)},
  };
  Rat fallback[] = {Rat(1), Rat(2), Rat(1, 2), Rat(3, 2), Rat(5, 2), Rat(7, 3),
                    Rat(5, 3), Rat(4, 3), Rat(2, 5), Rat(3, 5), Rat(7, 2), Rat(8, 3),
                    Rat(9, 4), Rat(11, 4)};
  int fi = 0;
  for (size_t i = 0; i < p.labels.size(); ++i) {
    auto it = fixed.find(p.labels[i]);
    if (it != fixed.end())
      p.values[i] = it->second;
    else
      p.values[i] = fallback[fi++ % 14];
  }
  return p;
}

}  // namespace

namespace {

std::string render_kinematical_algebras() {
  // Planar kinematical algebras: brackets + classification attributes.
  {
    Json j = Json::object();
    for (auto& name : catalog_names()) {
      CatalogEntry e = catalog_entry(name);
      Json row;
      row["params"] = {{"lambda", e.params.lambda},
                       {"gamma_inv_c2", e.params.gamma_inv_c2},
                       {"beta_sign", e.params.beta_sign}};
      row["brackets"] = bracket_table(e.algebra);
      row["absolute_time"] = e.attributes.absolute_time;
      row["absolute_space"] = e.attributes.absolute_space;
      row["cosmological"] = e.attributes.cosmological;
      row["anisotropic"] = e.anisotropic ? bracket_table(*e.anisotropic) : Json();
      j[name] = row;
    }
    return j.dump(1) + "\n";
  }
}

std::string render_contractions() {
  // Contraction arrows.
  {
    Json j = Json::object();
    auto kinds = {std::make_pair(ContractionKind::VelocitySpace, "velocity_space"),
                  std::make_pair(ContractionKind::VelocityTime, "velocity_time"),
                  std::make_pair(ContractionKind::SpaceTime, "space_time")};
    for (auto& [kind, key] : kinds) {
      Json arrows = Json::object();
      for (auto& name : catalog_names()) arrows[name] = contraction_target(name, kind);
      j[key] = arrows;
    }
    return j.dump(1) + "\n";
  }
}

std::string render_extended_algebras() {
  // Extended algebras (central and noncentral catalog).
  {
    Json j = Json::object();
    for (auto& name : extended_catalog_names()) {
      LieAlgebra alg = build_extended_catalog(name);
      Json row;
      Json order = Json::array();
      for (auto& g : alg.generators) order.push_back(g.name);
      row["generators"] = order;
      row["brackets"] = bracket_table(alg);
      j[name] = row;
    }
    return j.dump(1) + "\n";
  }
}

std::string render_parameter_relations() {
  // Parameter relation family.
  {
    Json j = Json::array();
    for (int lambda : {1, 0})
      for (int beta : {+1, 0, -1}) {
        auto f = relation_family(lambda, beta);
        j.push_back({{"lambda", lambda}, {"beta_sign", beta}, {"family", f.description}});
      }
    return j.dump(1) + "\n";
  }
}

std::string render_orbit_displays() {
  // Orbit displays: full Kirillov matrix (symbolic), default chart, omega and
  // theta at the canonical reference point.
  {
    Json j = Json::object();
    for (auto& name : extended_catalog_names()) {
      LieAlgebra alg = build_extended_catalog(name);
      alg.param_values = {{"omega", Rat(2)}, {"kappa", Rat(3)}};
      DualPoint ref = reference_point(alg);
      Json row;
      row["kirillov"] = matrix_sym(kirillov_matrix_sym(alg));
      auto chart_labels = default_chart(name);
      row["chart"] = chart_labels;
      Json pt = Json::object();
      for (size_t i = 0; i < ref.labels.size(); ++i) pt[ref.labels[i]] = ref.values[i].str();
      row["point"] = pt;
      OrbitChart chart = restrict_and_invert(alg, ref, chart_labels);
      row["omega"] = matrix_rat(chart.omega);
      row["theta"] = matrix_rat(chart.theta);
      j[name] = row;
    }
    return j.dump(1) + "\n";
  }
}

std::string render_invariant_library() {
  // Invariant library.
  {
    Json j = Json::object();
    for (auto& name : extended_catalog_names()) {
      if (name == "ncNH+" || name == "ncNH-") continue;  // no closed-form library entry
      Json row = Json::array();
      for (auto& inv : invariant_library(name))
        row.push_back({{"name", inv.name}, {"polynomial", inv.polynomial.str()}});
      j[name] = row;
    }
    return j.dump(1) + "\n";
  }
}

std::string render_deformation_cases() {
  // Deformation case table.
  {
    Json j = Json::array();
    struct Row {
      Rat n, d, w;
    };
    std::vector<std::pair<std::string, Row>> cases = {
        {"I", {Rat(1), Rat(1), Rat(-1)}},  {"II", {Rat(1), Rat(1), Rat(0)}},
        {"III", {Rat(1), Rat(0), Rat(1)}}, {"IV", {Rat(0), Rat(1), Rat(0)}},
        {"V", {Rat(0), Rat(0), Rat(0)}},
    };
    for (auto& [label, row] : cases) {
      auto c = classify_case(row.n, row.d, row.w);
      j.push_back({{"case", c.case_label},
                   {"group", c.group},
                   {"n", row.n.str()},
                   {"d", row.d.str()},
                   {"w", row.w.str()}});
    }
    return j.dump(1) + "\n";
  }
}

const std::vector<std::pair<std::string, std::string (*)()>>& fixture_sections() {
  static const std::vector<std::pair<std::string, std::string (*)()>> sections = {
      {"kinematical_algebras.json", render_kinematical_algebras},
      {"contractions.json", render_contractions},
      {"extended_algebras.json", render_extended_algebras},
      {"parameter_relations.json", render_parameter_relations},
      {"orbit_displays.json", render_orbit_displays},
      {"invariant_library.json", render_invariant_library},
      {"deformation_cases.json", render_deformation_cases},
  };
  return sections;
}

}  // namespace

std::map<std::string, std::string> generate_fixtures(int jobs) {
  std::map<std::string, std::string> out;
  if (jobs <= 1) {
    for (auto& [name, fn] : fixture_sections()) out[name] = fn();
    return out;
  }
  // Sections are pure with no shared state; render them concurrently.
  std::vector<std::future<std::pair<std::string, std::string>>> tasks;
  for (auto& [name, fn] : fixture_sections())
    tasks.push_back(std::async(std::launch::async,
                               [name = name, fn = fn]() { return std::make_pair(name, fn()); }));
  for (auto& t : tasks) out.insert(t.get());
  return out;
}

int write_fixtures(const std::string& dir, int jobs) {
  std::filesystem::create_directories(dir);
  auto fix = generate_fixtures(jobs);
  std::vector<std::future<void>> tasks;
  for (auto& [name, content] : fix) {
    auto write_one = [dir, name = name, content = content]() {
      std::ofstream os(dir + "/" + name, std::ios::binary);
      os << content;
    };
    if (jobs > 1)
      tasks.push_back(std::async(std::launch::async, write_one));
    else
      write_one();
  }
  for (auto& t : tasks) t.get();
  return static_cast<int>(fix.size());
}

std::vector<std::string> check_fixtures(const std::string& dir) {
  std::vector<std::string> bad;
  for (auto& [name, content] : generate_fixtures()) {
    std::ifstream is(dir + "/" + name, std::ios::binary);
    if (!is) {
      bad.push_back(name + " (missing)");
      continue;
    }
    std::string existing((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    if (existing != content) bad.push_back(name);
  }
  return bad;
}

}  // namespace kinekit

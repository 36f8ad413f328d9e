#include "kinekit/json_io.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace kinekit {

Json rat_to_json(const Rat& r) {
  return Json::array({boost::multiprecision::numerator(r).str(),
                      boost::multiprecision::denominator(r).str()});
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return Rat(j.get<std::string>());
  if (j.is_array() && j.size() == 2) {
    auto part = [](const Json& x) {
      return x.is_string() ? BigInt(x.get<std::string>()) : BigInt(x.get<long long>());
    };
    return Rat(part(j[0]), part(j[1]));
  }
  throw std::invalid_argument("rat_from_json: expected integer, \"p/q\" or [num,den]");
}

Json poly_to_json(const ParamPoly& p) {
  Json arr = Json::array();
  for (auto& [pows, c] : p.terms) {
    Json t;
    t["num"] = boost::multiprecision::numerator(c).str();
    t["den"] = boost::multiprecision::denominator(c).str();
    Json params = Json::object();
    for (auto& [k, e] : pows) params[k] = e;
    t["params"] = params;
    arr.push_back(t);
  }
  return arr;
}

Json algebra_to_json(const LieAlgebra& alg) {
  Json j;
  j["generators"] = Json::array();
  for (auto& g : alg.generators)
    j["generators"].push_back({{"name", g.name}, {"dim", {g.dim[0], g.dim[1], g.dim[2]}}});
  j["brackets"] = Json::array();
  for (auto& [idx, c] : alg.tensor.entries) {
    auto [i, jj, k] = idx;
    for (auto& [pows, coef] : c.terms) {
      Json b;
      b["i"] = i;
      b["j"] = jj;
      b["k"] = k;
      b["num"] = boost::multiprecision::numerator(coef).str();
      b["den"] = boost::multiprecision::denominator(coef).str();
      Json params = Json::object();
      for (auto& [name, e] : pows) params[name] = e;
      b["params"] = params;
      j["brackets"].push_back(b);
    }
  }
  Json pv = Json::object();
  for (auto& [name, v] : alg.param_values) pv[name] = rat_to_json(v);
  j["param_values"] = pv;
  return j;
}

LieAlgebra algebra_from_json(const Json& j, JacobiPolicy policy) {
  std::vector<GeneratorMeta> gens;
  for (auto& g : j.at("generators")) {
    GeneratorMeta m;
    m.name = g.at("name").get<std::string>();
    if (g.contains("dim")) {
      auto d = g.at("dim");
      m.dim = {d.at(0).get<int>(), d.at(1).get<int>(), d.at(2).get<int>()};
    }
    gens.push_back(m);
  }
  StructureTensor t(static_cast<int>(gens.size()));
  if (j.contains("brackets"))
    for (auto& b : j.at("brackets")) {
      Rat coef(BigInt(b.at("num").is_string() ? BigInt(b.at("num").get<std::string>())
                                              : BigInt(b.at("num").get<long long>())),
               BigInt(b.at("den").is_string() ? BigInt(b.at("den").get<std::string>())
                                              : BigInt(b.at("den").get<long long>())));
      Powers pows;
      if (b.contains("params"))
        for (auto& [name, e] : b.at("params").items()) pows[name] = e.get<int>();
      t.add(b.at("i").get<int>(), b.at("j").get<int>(), b.at("k").get<int>(),
            ParamPoly(ParamMonomial(coef, pows)));
    }
  std::map<std::string, Rat> pv;
  if (j.contains("param_values"))
    for (auto& [name, v] : j.at("param_values").items()) pv[name] = rat_from_json(v);
  return build(std::move(gens), std::move(t), std::move(pv), policy);
}

}  // namespace kinekit

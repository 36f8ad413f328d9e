#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

namespace kinekit {

/// Physical constants entering the group laws and coadjoint maps.
struct Phys {
  double omega = 1.0;
  double kappa = 1.0;
};

/// Element of one of the extended kinematical groups, in the canonical
/// product-of-exponentials parameterization; param slots align with the
/// generator order of the matching extended algebra.
struct GroupElement {
  std::string group;
  std::vector<double> params;
};

using StateMap = std::map<std::string, double>;

const std::vector<std::string>& coadjoint_group_names();  // 12 names, 8 families

/// Extended-catalog algebra matching a group name.
std::string group_algebra_name(const std::string& group);

std::vector<std::string> group_param_names(const std::string& group);

GroupElement group_identity(const std::string& group);

GroupElement random_group_element(const std::string& group, std::mt19937_64& rng,
                                  double scale = 1.0);

GroupElement group_multiply(const GroupElement& a, const GroupElement& b, const Phys& phys);

GroupElement group_inverse(const GroupElement& g, const Phys& phys);

/// Transforms a dual point (labels of the matching extended algebra).
StateMap coadjoint_apply(const GroupElement& g, const StateMap& state, const Phys& phys);

/// Finite-difference transport of the pairing through the group law; used as
/// an independent check of the transcribed coadjoint maps.
StateMap coadjoint_oracle(const GroupElement& g, const StateMap& state, const Phys& phys,
                          double step = 1e-5);

/// Closed-form time evolution on the orbit chart; `state` carries the chart
/// coordinates together with the orbit constants (see README for each group).
StateMap time_evolve(const std::string& group, const StateMap& state, double t,
                     const Phys& phys);

struct EvolutionCoefficients {
  double K = 0.0;  // ds/dt * mass at t = 0
  double N = 0.0;  // d^2s/dt^2 * mass
};

/// Coefficients of the quadratic-in-time action evolution s(t) = s + K t/m + N t^2/(2m).
EvolutionCoefficients evolution_coefficients(const std::string& group, const StateMap& state,
                                             const Phys& phys);

}  // namespace kinekit

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <string>

namespace kinekit {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline Rat rat_pow(const Rat& base, int e) {
  if (e == 0) return Rat(1);
  Rat b = e > 0 ? base : Rat(1) / base;
  int n = e > 0 ? e : -e;
  Rat out(1);
  for (int i = 0; i < n; ++i) out *= b;
  return out;
}

/// Small nonzero rational, uniform over a fixed pool. Used by property tests
/// and the generic-instantiation rank checks.
inline Rat random_rat(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 9);
  for (;;) {
    Rat r(num(rng), den(rng));
    if (!nonzero || r != 0) return r;
  }
}

inline std::string rat_str(const Rat& r) { return r.str(); }

}  // namespace kinekit

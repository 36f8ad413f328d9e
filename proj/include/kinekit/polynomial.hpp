#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kinekit/rational.hpp"

namespace kinekit {

/// Exponent map of a Laurent monomial in named symbols, e.g. {omega:2, kappa:-1}.
using Powers = std::map<std::string, int>;

/// One term: exact rational coefficient times a monomial in named symbols.
struct ParamMonomial {
  Rat coeff{0};
  Powers powers;

  ParamMonomial() = default;
  ParamMonomial(Rat c, Powers p = {}) : coeff(std::move(c)), powers(std::move(p)) {
    if (coeff == 0) powers.clear();
    prune();
  }

  void prune() {
    for (auto it = powers.begin(); it != powers.end();)
      it = (it->second == 0) ? powers.erase(it) : std::next(it);
  }

  ParamMonomial operator*(const ParamMonomial& o) const {
    ParamMonomial r(coeff * o.coeff, powers);
    if (r.coeff == 0) return ParamMonomial(Rat(0));
    for (auto& [k, v] : o.powers) r.powers[k] += v;
    r.prune();
    return r;
  }
};

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
/// Symbols cover physical parameters (omega, kappa, m, h, ...) and, where a
/// symbolic point is wanted, dual-space coordinate names themselves.
class ParamPoly {
 public:
  std::map<Powers, Rat> terms;

  ParamPoly() = default;
  ParamPoly(const Rat& c) {
    if (c != 0) terms[{}] = c;
  }
  ParamPoly(const ParamMonomial& m) {
    if (m.coeff != 0) terms[m.powers] = m.coeff;
  }

  static ParamPoly sym(const std::string& name, int power = 1) {
    return ParamPoly(ParamMonomial(Rat(1), {{name, power}}));
  }

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
  }
  Rat constant_value() const {
    if (terms.empty()) return Rat(0);
    if (!is_constant()) throw std::runtime_error("ParamPoly: not a constant");
    return terms.begin()->second;
  }

  ParamPoly& operator+=(const ParamPoly& o) {
    for (auto& [p, c] : o.terms) {
      auto it = terms.find(p);
      if (it == terms.end()) {
        terms.emplace(p, c);
      } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
      }
    }
    return *this;
  }
  ParamPoly operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    r += o;
    return r;
  }
  ParamPoly operator-() const {
    ParamPoly r = *this;
    for (auto& [p, c] : r.terms) c = -c;
    return r;
  }
  ParamPoly operator-(const ParamPoly& o) const { return *this + (-o); }
  ParamPoly operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (auto& [pa, ca] : terms)
      for (auto& [pb, cb] : o.terms) {
        Powers p = pa;
        for (auto& [k, v] : pb) p[k] += v;
        for (auto it = p.begin(); it != p.end();)
          it = (it->second == 0) ? p.erase(it) : std::next(it);
        auto it = r.terms.find(p);
        if (it == r.terms.end()) {
          Rat c = ca * cb;
          if (c != 0) r.terms.emplace(std::move(p), std::move(c));
        } else {
          it->second += ca * cb;
          if (it->second == 0) r.terms.erase(it);
        }
      }
    return r;
  }
  ParamPoly operator*(const Rat& s) const {
    if (s == 0) return ParamPoly();
    ParamPoly r = *this;
    for (auto& [p, c] : r.terms) c *= s;
    return r;
  }

  bool operator==(const ParamPoly& o) const { return terms == o.terms; }

  friend ParamPoly operator*(const Rat& s, const ParamPoly& p) { return p * s; }

  /// Partial derivative with respect to one symbol.
  ParamPoly derivative(const std::string& name) const {
    ParamPoly r;
    for (auto& [p, c] : terms) {
      auto it = p.find(name);
      if (it == p.end()) continue;
      Powers q = p;
      int e = it->second;
      if (e == 1)
        q.erase(name);
      else
        q[name] = e - 1;
      r += ParamPoly(ParamMonomial(c * e, q));
    }
    return r;
  }

  /// Substitute a symbol by an exact rational value.
  ParamPoly substitute(const std::string& name, const Rat& value) const {
    ParamPoly r;
    for (auto& [p, c] : terms) {
      auto it = p.find(name);
      if (it == p.end()) {
        r += ParamPoly(ParamMonomial(c, p));
        continue;
      }
      if (value == 0 && it->second < 0)
        throw std::runtime_error("ParamPoly: zero substituted into negative power of " + name);
      Powers q = p;
      q.erase(name);
      r += ParamPoly(ParamMonomial(c * rat_pow(value, it->second), q));
    }
    return r;
  }

  /// Substitute a symbol by another polynomial (non-negative powers only).
  ParamPoly substitute_poly(const std::string& name, const ParamPoly& value) const {
    ParamPoly r;
    for (auto& [p, c] : terms) {
      auto it = p.find(name);
      if (it == p.end()) {
        r += ParamPoly(ParamMonomial(c, p));
        continue;
      }
      if (it->second < 0) throw std::runtime_error("ParamPoly: negative power in poly substitution");
      Powers q = p;
      q.erase(name);
      ParamPoly t(ParamMonomial(c, q));
      for (int i = 0; i < it->second; ++i) t = t * value;
      r += t;
    }
    return r;
  }

  /// Exact evaluation; every symbol present must be bound.
  Rat evaluate(const std::map<std::string, Rat>& values) const {
    Rat total(0);
    for (auto& [p, c] : terms) {
      Rat t = c;
      for (auto& [k, e] : p) {
        auto it = values.find(k);
        if (it == values.end()) throw std::runtime_error("ParamPoly: unbound symbol " + k);
        t *= rat_pow(it->second, e);
      }
      total += t;
    }
    return total;
  }

  std::vector<std::string> symbols() const {
    std::vector<std::string> out;
    for (auto& [p, c] : terms)
      for (auto& [k, e] : p)
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    return out;
  }

  int total_degree_in(const std::vector<std::string>& names) const {
    int deg = 0;
    for (auto& [p, c] : terms) {
      int d = 0;
      for (auto& n : names) {
        auto it = p.find(n);
        if (it != p.end()) d += it->second;
      }
      deg = std::max(deg, d);
    }
    return deg;
  }

  std::string str() const;
};

}  // namespace kinekit

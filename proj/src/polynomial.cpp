#include "kinekit/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace kinekit {

std::string ParamPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [p, c] : terms) {
    Rat a = c;
    if (!first) os << (a > 0 ? " + " : " - ");
    if (first && a < 0) os << "-";
    first = false;
    if (a < 0) a = -a;
    bool unit = (a == 1) && !p.empty();
    if (!unit) os << a.str();
    bool star = !unit;
    for (auto& [k, e] : p) {
      if (star) os << "*";
      star = true;
      os << k;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace kinekit

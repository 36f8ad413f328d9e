#include "kinekit/exact_linalg.hpp"

#include <stdexcept>

namespace kinekit {

RatMat rat_identity(int n) {
  RatMat m(n, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
  int n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  RatMat c(n, RatVec(p, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (int l = 0; l < p; ++l) c[i][l] += a[i][j] * b[j][l];
    }
  return c;
}

RatVec rat_mul_vec(const RatMat& a, const RatVec& x) {
  RatVec y(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

RatMat rat_transpose(const RatMat& a) {
  if (a.empty()) return {};
  RatMat t(a[0].size(), RatVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

namespace {

// Row echelon in place; returns pivot columns.
std::vector<int> echelon(RatMat& a) {
  std::vector<int> pivots;
  int rows = a.size(), cols = rows ? a[0].size() : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    Rat inv = Rat(1) / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rat_rank(RatMat a) { return static_cast<int>(echelon(a).size()); }

std::vector<RatVec> rat_nullspace(RatMat a) {
  int cols = a.empty() ? 0 : a[0].size();
  auto pivots = echelon(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, Rat(0));
    v[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMat rat_inverse(RatMat a) {
  int n = a.size();
  RatMat aug = a;
  for (int i = 0; i < n; ++i) {
    RatVec id(n, Rat(0));
    id[i] = 1;
    aug[i].insert(aug[i].end(), id.begin(), id.end());
  }
  auto pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) < n || pivots.back() >= n) {
    int r = rat_rank(a);
    throw std::domain_error("rat_inverse: singular matrix of rank " + std::to_string(r));
  }
  RatMat inv(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

bool rat_solve(RatMat a, RatVec b, RatVec& x) {
  int rows = a.size(), cols = rows ? a[0].size() : 0;
  for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto pivots = echelon(a);
  for (size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] == cols) return false;  // inconsistent
  // Rows beyond the pivots must be zero.
  for (int i = pivots.size(); i < rows; ++i)
    if (a[i][cols] != 0) return false;
  x.assign(cols, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return true;
}

bool rat_in_span(const std::vector<RatVec>& basis, const RatVec& v) {
  if (basis.empty()) {
    for (auto& c : v)
      if (c != 0) return false;
    return true;
  }
  RatMat a(v.size(), RatVec(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < v.size(); ++i) a[i][j] = basis[j][i];
  RatVec x;
  return rat_solve(std::move(a), v, x);
}

}  // namespace kinekit

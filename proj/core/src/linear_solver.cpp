#include "landen/linear_solver.hpp"

#include "landen/errors.hpp"

namespace landen {

RationalMatrix solve_exact_multi(RationalMatrix a, RationalMatrix b) {
  size_t n = a.size();
  if (n == 0) return b;
  size_t rhs_cols = b[0].size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw Error("solve_exact: singular matrix");
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    Rational inv = a[col][col].inverse();
    for (size_t j = col; j < n; ++j) a[col][j] *= inv;
    for (size_t j = 0; j < rhs_cols; ++j) b[col][j] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      for (size_t j = 0; j < rhs_cols; ++j) b[r][j] -= f * b[col][j];
    }
  }
  return b;
}

std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b) {
  RationalMatrix bm(b.size());
  for (size_t i = 0; i < b.size(); ++i) bm[i] = {b[i]};
  RationalMatrix x = solve_exact_multi(std::move(a), std::move(bm));
  std::vector<Rational> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i][0];
  return out;
}

}  // namespace landen

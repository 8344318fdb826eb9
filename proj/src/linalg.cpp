#include "o5/linalg.hpp"

#include <utility>

namespace o5 {

Real dot(const Vec& a, const Vec& b) {
  Real s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Real norm(const Vec& v) { return sqrt(dot(v, v)); }

std::vector<Vec> nullspace_rref(Matrix m, const Real& tol_rel) {
  Real scale = 0;
  for (const Real& x : m.data)
    if (abs(x) > scale) scale = abs(x);
  if (scale == 0) scale = 1;
  Real thr = tol_rel * scale;

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::vector<bool> is_pivot_col(m.ncols, false);
  std::size_t prow = 0;
  for (std::size_t j = 0; j < m.ncols && prow < m.nrows; ++j) {
    std::size_t best = prow;
    for (std::size_t i = prow + 1; i < m.nrows; ++i)
      if (abs(m.at(i, j)) > abs(m.at(best, j))) best = i;
    Real mag = abs(m.at(best, j));
    if (mag > thr / 1000 && mag < thr * 1000)
      throw PrecisionError("ambiguous rank decision during elimination");
    if (mag <= thr) continue;  // free column
    if (best != prow)
      for (std::size_t c = 0; c < m.ncols; ++c)
        std::swap(m.at(best, c), m.at(prow, c));
    Real inv = 1 / m.at(prow, j);
    for (std::size_t c = j; c < m.ncols; ++c) m.at(prow, c) *= inv;
    for (std::size_t i = 0; i < m.nrows; ++i) {
      if (i == prow) continue;
      Real f = m.at(i, j);
      if (f == 0) continue;
      for (std::size_t c = j; c < m.ncols; ++c)
        m.at(i, c) -= f * m.at(prow, c);
    }
    is_pivot_col[j] = true;
    pivots.emplace_back(prow, j);
    ++prow;
  }

  std::vector<Vec> kernel;
  for (std::size_t f = 0; f < m.ncols; ++f) {
    if (is_pivot_col[f]) continue;
    Vec v(m.ncols, Real(0));
    v[f] = 1;
    for (auto [pr, pc] : pivots) v[pc] = -m.at(pr, f);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

void gram_schmidt(std::vector<Vec>& vs, const Real& tol_rel) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Real c = dot(vs[j], vs[i]);
      for (std::size_t k = 0; k < vs[i].size(); ++k) vs[i][k] -= c * vs[j][k];
    }
    Real n = norm(vs[i]);
    if (n <= tol_rel)
      throw ConsistencyError("linearly dependent vectors in Gram-Schmidt");
    Real inv = 1 / n;
    for (Real& x : vs[i]) x *= inv;
  }
}

void normalize_sign_fixed(Vec& v, const Real& threshold) {
  Real n = norm(v);
  if (n == 0) throw ConsistencyError("cannot normalize zero vector");
  Real inv = 1 / n;
  for (Real& x : v) x *= inv;
  for (const Real& x : v) {
    if (abs(x) > threshold) {
      if (x < 0)
        for (Real& y : v) y = -y;
      break;
    }
  }
}

}  // namespace o5

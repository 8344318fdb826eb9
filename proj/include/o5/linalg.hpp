#pragma once
// Small dense linear algebra on mpfr reals. Deliberately minimal: the
// kernel gauge depends on a deterministic lexicographic pivot order, so a
// general-purpose library decomposition is not usable here.

#include <vector>

#include "o5/exactnum.hpp"

namespace o5 {

using Vec = std::vector<Real>;

struct Matrix {
  std::size_t nrows = 0, ncols = 0;
  std::vector<Real> data;  // row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : nrows(r), ncols(c), data(r * c, Real(0)) {}
  Real& at(std::size_t i, std::size_t j) { return data[i * ncols + j]; }
  const Real& at(std::size_t i, std::size_t j) const { return data[i * ncols + j]; }
};

Real dot(const Vec& a, const Vec& b);
Real norm(const Vec& v);

// Null space in the reduced-echelon gauge: pivot columns are chosen greedily
// in column order (earliest column whose remaining entries exceed the
// threshold), one kernel vector per free column, ordered by free column.
// Each vector has a 1 in its own free column and 0 in every other free
// column. Vectors are neither normalized nor sign-fixed here.
// Threshold is tol_rel * max|entry| of the input. A candidate pivot whose
// magnitude falls within a factor 1000 of the threshold on either side is
// treated as an ambiguous rank decision -> PrecisionError.
std::vector<Vec> nullspace_rref(Matrix m, const Real& tol_rel);

// In-place modified Gram-Schmidt; input vectors must be linearly
// independent (ConsistencyError otherwise). Output vectors are orthonormal.
void gram_schmidt(std::vector<Vec>& vs, const Real& tol_rel);

// Scale v to unit norm and make its first entry of magnitude > threshold
// positive.
void normalize_sign_fixed(Vec& v, const Real& threshold);

}  // namespace o5

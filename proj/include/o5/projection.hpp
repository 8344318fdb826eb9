#pragma once
// Angular-momentum projection: the L+ ladder acting on level-k weight
// states of (tau 0), its matrix in (q, t) labels, branching multiplicities
// and the projected O(5) > O(3) basis vectors (kernel of the ladder).

#include <compare>
#include <vector>

#include "o5/canonical.hpp"
#include "o5/exactnum.hpp"

namespace o5 {

struct QtPair {
  int q = 0, t = 0;
  auto operator<=>(const QtPair&) const = default;
};

// (q, t) pairs of level k, lexicographic. Independent of tau.
std::vector<QtPair> grid(int k);

// Whether (q, t) labels an existing canonical state at level k of (tau 0).
bool state_valid(int tau, int k, QtPair p);

// Canonical labels of the level-k state (q, t): r = k - q,
// m_r = k - 2q + 2t, m_J = (tau - k + q - t)/2.
CanonicalLabel state_label(int tau, int k, QtPair p);

long restricted_partition_count(int tau, int k);  // <= tau parts, parts <= 4
int multiplicity(int tau, int k);                 // Multi(tau, k), 0 <= k <= 2tau

// Matrix of L+ from level k to level k-1, rows labelled by valid level-(k-1)
// targets, columns by valid level-k sources. Entries are exact.
struct ProjectionMatrix {
  int tau = 0, k = 0;
  std::vector<QtPair> rows, cols;
  std::vector<SqrtReal> entries;  // row-major, rows.size() x cols.size()

  const SqrtReal& at(std::size_t i, std::size_t j) const {
    return entries[i * cols.size() + j];
  }
};

ProjectionMatrix projection_matrix(int tau, int k, const PrecisionConfig& cfg = {});

enum class Gauge { RawZeta, Orthonormal };

// One projected basis vector; coeffs align with support. Float shadows are
// authoritative, exact radicands are filled by reconstruction when found.
struct KernelVector {
  int tau = 0, k = 0;
  Gauge gauge = Gauge::RawZeta;
  int index = 1;  // zeta or chi, 1-based
  std::vector<QtPair> support;
  std::vector<NumericValue> coeffs;
};

// Null space of the level-k ladder matrix in the reduced-echelon gauge,
// each vector unit-normalized with positive leading coefficient. The
// dimension must equal multiplicity(tau, k) (ConsistencyError otherwise).
std::vector<KernelVector> kernel_basis(int tau, int k,
                                       const PrecisionConfig& cfg = {});

// Gram-Schmidt of kernel_basis in zeta order (chi = 1 coincides with
// zeta = 1), unit-normalized, positive leading coefficient.
std::vector<KernelVector> orthonormal_basis(int tau, int k,
                                            const PrecisionConfig& cfg = {});

}  // namespace o5

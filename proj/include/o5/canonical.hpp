#pragma once
// Canonical O(5) > O1(3) x U(1) basis for symmetric irreps (tau 0):
// state labels, pair-ladder expansion coefficients, single-boson matrix
// elements and the elementary canonical isoscalar factors.
//
// Half-integer m_J is carried as a doubled integer mJ2 = 2*m_J.

#include <vector>

#include "o5/exactnum.hpp"

namespace o5 {

struct CanonicalLabel {
  int tau = 0;
  int r = 0;
  int m_r = 0;
  int mJ2 = 0;

  int t() const { return tau - r - mJ2; }
  bool valid() const;
  void validate() const;  // DomainError if not valid()
};

long o5_dim(int tau);  // (tau+1)(tau+2)(2tau+3)/6

struct RmJ {
  int r;
  int mJ2;
  bool operator==(const RmJ&) const = default;
};

// All (r, m_J) pairs of the irrep (tau 0), sorted by descending r + 2 m_J
// and descending r within a tie.
std::vector<RmJ> enumerate_states(int tau);

// Expansion coefficient b_xi of the canonical state over pair-ladder powers;
// 0 <= xi <= min(t/2, (4 m_J + t)/2).
SqrtReal pair_ladder_coeff(int tau, int r, int mJ2, int xi,
                           const PrecisionConfig& cfg = {});

// Exact check of the norm identity behind the b_xi (sum of squares of the
// double-factorial ratios equals the closed-form product).
bool verify_norm_identity(int t, int r, int mJ2);

// <bra| b^dag_mu |ket> with bra.tau == ket.tau + 1; reduced over nothing,
// i.e. the full matrix element in the canonical basis. Zero when the label
// deltas match no allowed pattern.
SqrtReal boson_matrix_element(int mu, const CanonicalLabel& bra,
                              const CanonicalLabel& ket,
                              const PrecisionConfig& cfg = {});

// Query for < (tau_out) r_out m'_J ; (1 0) op | (tau_in) r_in m_J >.
// Exactly one of the two operator slots is used: tensor (r=1 piece, label
// mu in {-1,0,+1}, m2 == 0) or spinor (r=0 piece, m2 = 2m in {-1,+1},
// mu == 0). Isoscalar factors do not depend on the magnetic labels; mu is
// range-checked only.
struct IsfQuery {
  int tau_out, r_out, mJ2_out;
  bool spinor = false;
  int mu = 0;
  int m2 = 0;
  int tau_in, r_in, mJ2_in;
};

SqrtReal isf_canonical(const IsfQuery& q, const PrecisionConfig& cfg = {});

namespace detail {
// Forward-orientation ISF < (tau) r mJ ; (1 0) op | (tau+1) r_out mJ2_out >.
// Spinor: r_out == r, mJ2_out = mJ2 + m2. Tensor: r_out = r +- 1,
// mJ2_out = mJ2.
SqrtReal forward_isf_spinor(int tau, int r, int mJ2, int m2,
                            const PrecisionConfig& cfg = {});
SqrtReal forward_isf_tensor(int tau, int r, int mJ2, int r_out,
                            const PrecisionConfig& cfg = {});
// O(3) Clebsch-Gordan <r m; 1 mu | r_out m+mu> (Condon-Shortley).
SqrtReal cg_with_one(int r, int m, int mu, int r_out,
                     const PrecisionConfig& cfg = {});
}  // namespace detail

}  // namespace o5

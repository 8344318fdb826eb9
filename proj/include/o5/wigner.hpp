#pragma once
// Elementary O(5) > O(3) Wigner coefficients (isoscalar factors) for
// (tau 0) x (1 0) -> (tau+1 0), evaluated from the projected orthonormal
// basis vectors. Angular momenta are encoded through the level labels
// L1 = 2 tau - k1 and L = 2 tau + 2 - kp with kp = k1 + 2 - mu.

#include "o5/exactnum.hpp"

namespace o5 {

struct WignerQuery {
  int tau = 0;
  int chi1 = 1;  // multiplicity index on the (tau 0) side, 1-based
  int k1 = 0;    // L1 = 2 tau - k1
  int mu = 2;    // O(3) projection label of the boson operator
  int chi = 1;   // multiplicity index on the (tau+1 0) side, 1-based
  int kp = 0;    // L = 2 tau + 2 - kp; selection rule kp = k1 + 2 - mu
};

// Mu-specific bilinear sums over the two expansion-coefficient vectors.
// Returns zero when the selection rule fails or either L is absent from
// its branching; DomainError for out-of-range mu or multiplicity index.
NumericValue wigner_o3(const WignerQuery& q, const PrecisionConfig& cfg = {});

// | sum over (chi1, L1) of wigner_o3^2  -  1 |
Real check_orthonormality(int tau, int chi, int kp, const PrecisionConfig& cfg = {});

// (-1)^(L1 + 2 - L)
int exchange_phase(int L1, int L);

// Coefficient of the reversed coupling <(tau+1 0)...; (1 0)...|(tau 0)...>:
// exchange_phase * sqrt(dim(tau)(2L+1) / (dim(tau+1)(2L1+1))) * wigner_o3.
NumericValue reversed_coupling(const WignerQuery& q, const PrecisionConfig& cfg = {});

namespace detail {
// Independent evaluation through the generic bilinear sum over canonical
// single-boson matrix elements; used to cross-check the per-mu formulas.
NumericValue wigner_o3_general(const WignerQuery& q, const PrecisionConfig& cfg = {});

// Evaluates both paths; returns the absolute difference of the float
// shadows and throws ConsistencyError when it exceeds
// 10^(-decimal_digits/2).
Real verify_formula_paths(const WignerQuery& q, const PrecisionConfig& cfg = {});

// The mu = -2 sum with the radicand printed in the source formula, whose
// leading factor reads (4tau-2k+1)^2 where consistency with the generic
// path requires (4tau-2k+1)(2k-2q+t+3). Kept only so the discrepancy can
// be shown.
NumericValue wigner_o3_mu_m2_as_printed(const WignerQuery& q,
                                        const PrecisionConfig& cfg = {});
}  // namespace detail

}  // namespace o5

#pragma once
// Brute-force Fock-space oracle for the d-boson realization: explicit
// five-mode occupation states, sparse second-quantized operators, direct
// construction of seniority highest-weight subspaces, and cross-checks of
// the projected basis against them. Everything here is float-shadow only
// and deliberately independent of the projection recurrences.

#include <array>
#include <map>
#include <vector>

#include "o5/canonical.hpp"
#include "o5/exactnum.hpp"

namespace o5 {

// occupations indexed by mode 0..4 <-> mu = +2, +1, 0, -1, -2
using FockState = std::array<int, 5>;
using FockVector = std::map<FockState, Real>;

inline int mode_of(int mu) { return 2 - mu; }
inline int boson_count(const FockState& s) { return s[0] + s[1] + s[2] + s[3] + s[4]; }
inline int weight(const FockState& s) {  // L0 eigenvalue
  return 2 * s[0] + s[1] - s[3] - 2 * s[4];
}

struct BosonTerm {
  Real coeff;
  FockState create{};      // powers of b^dag per mode
  FockState annihilate{};  // powers of b per mode
};

struct SparseOperator {
  std::vector<BosonTerm> terms;
};

FockVector act(const SparseOperator& op, const FockVector& v);
Real fock_dot(const FockVector& a, const FockVector& b);
Real fock_norm(const FockVector& v);

// d-boson pairing and angular momentum operators
SparseOperator pairing_p2();      // sqrt(1/2) sum_mu (-1)^mu b_mu b_-mu
SparseOperator pairing_p2_alt();  // sqrt(2) b_2 b_-2 - P_1
SparseOperator pairing_p1();      // sqrt(1/2)(2 b_1 b_-1 - b_0 b_0)
SparseOperator pairing_p1_dagger();
SparseOperator l_plus();   // sqrt(2)(b+_1 b_0 + b+_0 b_-1)
SparseOperator big_l_plus();  // sqrt(3/2) l_+ + sqrt(2)(b+_2 b_1 + b+_-1 b_-2)

// Explicit Fock realization of a canonical basis state.
FockVector realize_canonical(const CanonicalLabel& s, const PrecisionConfig& cfg = {});

// All occupation states with boson number n and L0 weight m.
std::vector<FockState> sector(int n, int m);

// Orthonormal basis of the joint kernel of P2 and L+ on the
// (N = tau, L0 = L) sector: the seniority-tau highest-weight vectors.
std::vector<FockVector> seniority_highest_weight(int tau, int L,
                                                 const PrecisionConfig& cfg = {});

struct CrosscheckReport {
  int tau = 0, k = 0;
  int multiplicity_formula = 0;
  int multiplicity_oracle = 0;
  Real max_p2_residual;      // ||P2 u|| over projected vectors u
  Real max_lplus_residual;   // ||L+ u||
  Real max_norm_error;       // | ||u|| - 1 |
  Real subspace_distance;    // Frobenius distance of the two projectors
};

// Realizes the projected orthonormal basis at (tau, k) and compares it
// against the oracle subspace. Throws ConsistencyError when multiplicities
// disagree or any residual exceeds 10^(-decimal_digits/2).
CrosscheckReport crosscheck(int tau, int k, const PrecisionConfig& cfg = {});

}  // namespace o5

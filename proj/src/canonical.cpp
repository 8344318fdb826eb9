#include "o5/canonical.hpp"

#include <algorithm>

namespace o5 {

bool CanonicalLabel::valid() const {
  if (tau < 0 || r < 0 || r > tau) return false;
  if (m_r < -r || m_r > r) return false;
  int tt = t();
  if (tt < 0 || tt % 2 != 0) return false;
  if (2 * mJ2 + tt < 0) return false;
  return true;
}

void CanonicalLabel::validate() const {
  if (!valid()) throw DomainError("invalid canonical label");
}

long o5_dim(int tau) {
  if (tau < 0) throw DomainError("negative seniority");
  long t = tau;
  return (t + 1) * (t + 2) * (2 * t + 3) / 6;
}

std::vector<RmJ> enumerate_states(int tau) {
  if (tau < 0) throw DomainError("negative seniority");
  std::vector<RmJ> out;
  for (int r = 0; r <= tau; ++r)
    for (int mJ2 = -(tau - r); mJ2 <= tau - r; mJ2 += 2) out.push_back({r, mJ2});
  std::stable_sort(out.begin(), out.end(), [](const RmJ& a, const RmJ& b) {
    if (a.r + a.mJ2 != b.r + b.mJ2) return a.r + a.mJ2 > b.r + b.mJ2;
    return a.r > b.r;
  });
  return out;
}

SqrtReal pair_ladder_coeff(int tau, int r, int mJ2, int xi,
                           const PrecisionConfig& cfg) {
  CanonicalLabel lab{tau, r, r, mJ2};
  lab.validate();
  int t = lab.t();
  int w = 2 * mJ2 + t;  // 4 m_J + t
  if (xi < 0 || 2 * xi > t || 2 * xi > w)
    throw DomainError("pair-ladder power out of range");
  Rational num = Rational(double_factorial(2 * tau + 1 - t)) *
                 double_factorial(w) * double_factorial(2 * r + t + 1) *
                 double_factorial(t);
  Rational den = Rational(double_factorial(2 * tau + 1)) *
                 double_factorial(w - 2 * xi) * double_factorial(2 * xi) *
                 double_factorial(2 * r + 2 * xi + 1) *
                 double_factorial(t - 2 * xi);
  return sqrt_real(1, num / den, cfg);
}

bool verify_norm_identity(int t, int r, int mJ2) {
  if (t < 0 || t % 2 != 0 || r < 0) throw DomainError("bad norm-identity arguments");
  int w = 2 * mJ2 + t;
  if (w < 0) throw DomainError("bad norm-identity arguments");
  int tau = r + mJ2 + t;
  Rational lhs = 0;
  for (int xi = 0; 2 * xi <= t && 2 * xi <= w; ++xi) {
    Rational num = Rational(double_factorial(w)) * double_factorial(t) *
                   double_factorial(2 * r + 1);
    Rational den = Rational(double_factorial(w - 2 * xi)) *
                   double_factorial(2 * xi) *
                   double_factorial(2 * r + 2 * xi + 1) *
                   double_factorial(t - 2 * xi);
    lhs += num / den;
  }
  Rational rhs = Rational(double_factorial(2 * tau + 1)) *
                 double_factorial(2 * r + 1) /
                 (Rational(double_factorial(2 * tau + 1 - t)) *
                  double_factorial(2 * r + t + 1));
  return lhs == rhs;
}

SqrtReal boson_matrix_element(int mu, const CanonicalLabel& bra,
                              const CanonicalLabel& ket,
                              const PrecisionConfig& cfg) {
  if (mu < -2 || mu > 2) throw DomainError("boson component out of range");
  bra.validate();
  ket.validate();
  if (bra.tau != ket.tau + 1)
    throw DomainError("boson matrix element requires bra.tau == ket.tau + 1");
  const long tau = ket.tau, r = ket.r, mr = ket.m_r, mJ2 = ket.mJ2;
  const int dr = bra.r - ket.r;
  const int dmr = bra.m_r - ket.m_r;
  const int dmJ2 = bra.mJ2 - ket.mJ2;
  SqrtReal zero = sqrt_real(0, 0, cfg);

  if (mu == 2 || mu == -2) {
    if (dr != 0 || dmr != 0 || dmJ2 != (mu > 0 ? 1 : -1)) return zero;
    long s = mu > 0 ? mJ2 : -mJ2;
    Rational rad = Rational((tau + r + s + 3) * (tau - r + s + 2),
                            2 * (2 * tau + 3));
    return sqrt_real(1, rad, cfg);
  }
  if (mu == 1 || mu == -1) {
    if (dmJ2 != 0 || dmr != mu) return zero;
    long a = mu > 0 ? mr : -mr;  // r + a = r +- m_r with the +mu pattern
    if (dr == 1) {
      Rational rad = Rational((tau + r + mJ2 + 3) * (tau + r - mJ2 + 3) *
                                  (r + a + 1) * (r + a + 2),
                              2 * (2 * tau + 3) * (2 * r + 3) * (2 * r + 1));
      return sqrt_real(1, rad, cfg);
    }
    if (dr == -1) {
      Rational rad = Rational((tau - r + mJ2 + 2) * (tau - r - mJ2 + 2) *
                                  (r - a) * (r - a - 1),
                              2 * (2 * tau + 3) * (2 * r + 1) * (2 * r - 1));
      return sqrt_real(rad == 0 ? 0 : 1, rad, cfg);
    }
    return zero;
  }
  // mu == 0
  if (dmJ2 != 0 || dmr != 0) return zero;
  if (dr == 1) {
    Rational rad = Rational((tau + r + mJ2 + 3) * (tau + r - mJ2 + 3) *
                                (r - mr + 1) * (r + mr + 1),
                            (2 * tau + 3) * (2 * r + 3) * (2 * r + 1));
    return sqrt_real(1, rad, cfg);
  }
  if (dr == -1) {
    Rational rad = Rational((tau - r + mJ2 + 2) * (tau - r - mJ2 + 2) *
                                (r + mr) * (r - mr),
                            (2 * tau + 3) * (2 * r + 1) * (2 * r - 1));
    return sqrt_real(rad == 0 ? 0 : -1, rad, cfg);
  }
  return zero;
}

namespace detail {

SqrtReal forward_isf_spinor(int tau, int r, int mJ2, int m2,
                            const PrecisionConfig& cfg) {
  if (m2 != 1 && m2 != -1) throw DomainError("spinor m must be +-1/2");
  long T = tau, R = r, s = m2 > 0 ? mJ2 : -mJ2;
  Rational rad(( T + R + s + 3) * (T - R + s + 2),
               2 * (2 * T + 3) * (T + 1));
  return sqrt_real(rad == 0 ? 0 : 1, rad, cfg);
}

SqrtReal forward_isf_tensor(int tau, int r, int mJ2, int r_out,
                            const PrecisionConfig& cfg) {
  long T = tau, R = r, M = mJ2;
  if (r_out == r + 1) {
    Rational rad((T + R + M + 3) * (T + R - M + 3) * (R + 1),
                 (2 * T + 3) * (T + 1) * (2 * R + 3));
    return sqrt_real(rad == 0 ? 0 : 1, rad, cfg);
  }
  if (r_out == r - 1 && r >= 1) {
    Rational rad((T - R + M + 2) * (T - R - M + 2) * R,
                 (2 * T + 3) * (T + 1) * (2 * R - 1));
    return sqrt_real(rad == 0 ? 0 : 1, rad, cfg);
  }
  return sqrt_real(0, 0, cfg);
}

SqrtReal cg_with_one(int r, int m, int mu, int r_out,
                     const PrecisionConfig& cfg) {
  if (mu < -1 || mu > 1) throw DomainError("cg_with_one: |mu| > 1");
  if (r < 0 || m < -r || m > r) throw DomainError("cg_with_one: bad (r, m)");
  long R = r, M = m;
  if (r_out == r + 1) {
    if (mu == 1)
      return sqrt_real(1, Rational((R + M + 1) * (R + M + 2),
                                   (2 * R + 1) * (2 * R + 2)), cfg);
    if (mu == 0)
      return sqrt_real(1, Rational((R - M + 1) * (R + M + 1),
                                   (2 * R + 1) * (R + 1)), cfg);
    return sqrt_real(1, Rational((R - M + 1) * (R - M + 2),
                                 (2 * R + 1) * (2 * R + 2)), cfg);
  }
  if (r_out == r && r >= 1) {
    if (mu == 1) {
      Rational rad((R + M + 1) * (R - M), 2 * R * (R + 1));
      return sqrt_real(rad == 0 ? 0 : -1, rad, cfg);
    }
    if (mu == 0)  // m / sqrt(r(r+1))
      return sqrt_real(M > 0 ? 1 : (M < 0 ? -1 : 0),
                       Rational(M * M, R * (R + 1)), cfg);
    Rational rad((R - M + 1) * (R + M), 2 * R * (R + 1));
    return sqrt_real(rad == 0 ? 0 : 1, rad, cfg);
  }
  if (r_out == r - 1 && r >= 1) {
    if (mu == 1)
      return sqrt_real((R - M) * (R - M - 1) == 0 ? 0 : 1,
                       Rational((R - M) * (R - M - 1), 2 * R * (2 * R + 1)), cfg);
    if (mu == 0) {
      Rational rad((R - M) * (R + M), R * (2 * R + 1));
      return sqrt_real(rad == 0 ? 0 : -1, rad, cfg);
    }
    Rational rad((R + M) * (R + M - 1), 2 * R * (2 * R + 1));
    return sqrt_real(rad == 0 ? 0 : 1, rad, cfg);
  }
  return sqrt_real(0, 0, cfg);
}

}  // namespace detail

SqrtReal isf_canonical(const IsfQuery& q, const PrecisionConfig& cfg) {
  if (q.spinor) {
    if (q.mu != 0 || (q.m2 != 1 && q.m2 != -1))
      throw DomainError("spinor query requires mu == 0, m = +-1/2");
  } else {
    if (q.m2 != 0 || q.mu < -1 || q.mu > 1)
      throw DomainError("tensor query requires m == 0, mu in {-1,0,+1}");
  }
  SqrtReal zero = sqrt_real(0, 0, cfg);
  CanonicalLabel in{q.tau_in, q.r_in, q.r_in, q.mJ2_in};
  CanonicalLabel out{q.tau_out, q.r_out, q.r_out, q.mJ2_out};
  if (!in.valid() || !out.valid()) return zero;
  if (q.tau_out != q.tau_in + 1 && q.tau_out != q.tau_in - 1) return zero;

  if (q.spinor) {
    if (q.r_out != q.r_in || q.mJ2_out != q.mJ2_in - q.m2) return zero;
    if (q.tau_out == q.tau_in - 1)
      return detail::forward_isf_spinor(q.tau_out, q.r_out, q.mJ2_out, q.m2, cfg);
    // reversed orientation via the spinor symmetry relation
    SqrtReal fwd = detail::forward_isf_spinor(q.tau_in, q.r_in, q.mJ2_in, -q.m2, cfg);
    Rational dims(o5_dim(q.tau_in), o5_dim(q.tau_out));
    return mul(sqrt_real(-1, dims, cfg), fwd, cfg);
  }

  if (q.mJ2_out != q.mJ2_in) return zero;
  if (q.r_out != q.r_in + 1 && q.r_out != q.r_in - 1) return zero;
  if (q.tau_out == q.tau_in - 1)
    return detail::forward_isf_tensor(q.tau_out, q.r_out, q.mJ2_out, q.r_in, cfg);
  // reversed orientation via the tensor symmetry relation; the phase
  // (-1)^{r+1-r'} is +1 for r' = r +- 1
  SqrtReal fwd = detail::forward_isf_tensor(q.tau_in, q.r_in, q.mJ2_in, q.r_out, cfg);
  Rational dims(Int(2 * q.r_out + 1) * o5_dim(q.tau_in),
                Int(2 * q.r_in + 1) * o5_dim(q.tau_out));
  return mul(sqrt_real(1, dims, cfg), fwd, cfg);
}

}  // namespace o5

#include "o5/projection.hpp"

#include <cstdlib>
#include <functional>

#include "o5/linalg.hpp"

namespace o5 {

std::vector<QtPair> grid(int k) {
  if (k < 0) throw DomainError("negative level");
  std::vector<QtPair> out;
  for (int q = 0; q <= k; ++q)
    for (int t = 0; 2 * t <= k; t += 2)
      if (k - q >= std::abs(k - 2 * q + 2 * t)) out.push_back({q, t});
  return out;
}

bool state_valid(int tau, int k, QtPair p) {
  return 2 * tau - 2 * k + 2 * p.q - p.t >= 0;
}

CanonicalLabel state_label(int tau, int k, QtPair p) {
  return {tau, k - p.q, k - 2 * p.q + 2 * p.t, tau - k + p.q - p.t};
}

long restricted_partition_count(int tau, int k) {
  if (k < 0) return 0;
  if (tau < 0) return k == 0 ? 1 : 0;
  // partitions of k into at most tau parts, each part <= 4
  std::function<long(int, int, int)> count = [&](int n, int maxpart, int slots) -> long {
    if (n == 0) return 1;
    if (slots == 0 || maxpart == 0) return 0;
    long total = 0;
    for (int p = std::min(n, maxpart); p >= 1; --p)
      total += count(n - p, p, slots - 1);
    return total;
  };
  return count(k, 4, tau);
}

int multiplicity(int tau, int k) {
  if (tau < 0 || k < 0 || k > 2 * tau)
    throw DomainError("multiplicity requires 0 <= k <= 2 tau");
  long m = restricted_partition_count(tau, k) +
           restricted_partition_count(tau - 2, k - 5) -
           restricted_partition_count(tau, k - 1) -
           restricted_partition_count(tau - 2, k - 4);
  return static_cast<int>(m);
}

namespace {

// The three-term ladder action: row (q', t') at level k-1 receives
// contributions from sources (q'+1, t'), (q'+2, t') and (q'+3, t'+2) at
// level k, with q = q'+1 fixing the recurrence variable.
SqrtReal entry_A(int tau, int k, int q, int t, const PrecisionConfig& cfg) {
  long a1 = 2 * k - 3 * q + 2 * t + 2;
  long a2 = 2 * k - 3 * q + 2 * t + 3;
  long a3 = 2 * k - 2 * q + t + 3;
  long a4 = 2 * tau - 2 * k + 2 * q - t;
  long d = (2 * k - 2 * q + 1) * (2 * k - 2 * q + 3);
  return sqrt_real(1, Rational(a1 * a2 * a3 * a4, d), cfg);
}

SqrtReal entry_B(int k, int q, int t, const PrecisionConfig& cfg) {
  long n = 3 * (q - 2 * t) * (2 * k - 3 * q + 2 * t + 1);
  return sqrt_real(1, Rational(n), cfg);
}

SqrtReal entry_C(int tau, int k, int q, int t, const PrecisionConfig& cfg) {
  long n1 = (q - 2 * t - 1) * (q - 2 * t - 2);
  if (n1 == 0) return sqrt_real(0, 0, cfg);
  long n2 = (t + 2) * (2 * tau - t - 1 + 2);  // (t+2)(2 tau - t + 1)
  long d = (2 * k - 2 * q - 1) * (2 * k - 2 * q + 1);
  return sqrt_real(1, Rational(n1 * n2, d), cfg);
}

}  // namespace

ProjectionMatrix projection_matrix(int tau, int k, const PrecisionConfig& cfg) {
  PrecisionGuard g(cfg);
  if (tau < 0 || k < 1 || k > 2 * tau)
    throw DomainError("projection_matrix requires 1 <= k <= 2 tau");
  ProjectionMatrix m;
  m.tau = tau;
  m.k = k;
  for (QtPair p : grid(k))
    if (state_valid(tau, k, p)) m.cols.push_back(p);
  for (QtPair p : grid(k - 1))
    if (state_valid(tau, k - 1, p)) m.rows.push_back(p);
  m.entries.assign(m.rows.size() * m.cols.size(), sqrt_real(0, 0, cfg));

  auto col_index = [&](QtPair p) -> long {
    for (std::size_t j = 0; j < m.cols.size(); ++j)
      if (m.cols[j] == p) return static_cast<long>(j);
    return -1;
  };

  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    int q = m.rows[i].q + 1;  // recurrence variable of this row
    int t = m.rows[i].t;
    long j;
    if ((j = col_index({q - 1, t})) >= 0)
      m.entries[i * m.cols.size() + j] = entry_A(tau, k, q, t, cfg);
    if ((j = col_index({q, t})) >= 0)
      m.entries[i * m.cols.size() + j] = entry_B(k, q, t, cfg);
    if ((j = col_index({q + 1, t + 2})) >= 0)
      m.entries[i * m.cols.size() + j] = entry_C(tau, k, q, t, cfg);
  }
  return m;
}

namespace {

KernelVector to_kernel_vector(int tau, int k, Gauge gauge, int index,
                              const std::vector<QtPair>& support, const Vec& v,
                              const PrecisionConfig& cfg) {
  KernelVector out;
  out.tau = tau;
  out.k = k;
  out.gauge = gauge;
  out.index = index;
  out.support = support;
  out.coeffs.reserve(v.size());
  for (const Real& x : v) out.coeffs.push_back(make_numeric(x, cfg));
  return out;
}

std::vector<Vec> raw_kernel(int tau, int k, std::vector<QtPair>& support,
                            const PrecisionConfig& cfg) {
  if (tau < 0 || k < 0 || k > 2 * tau)
    throw DomainError("kernel requires 0 <= k <= 2 tau");
  if (k == 0) {
    support = {QtPair{0, 0}};
    return {Vec{Real(1)}};
  }
  ProjectionMatrix pm = projection_matrix(tau, k, cfg);
  support = pm.cols;
  Matrix num(pm.rows.size(), pm.cols.size());
  for (std::size_t i = 0; i < pm.rows.size(); ++i)
    for (std::size_t j = 0; j < pm.cols.size(); ++j)
      num.at(i, j) = pm.at(i, j).shadow;
  Real tol(cfg.rank_tolerance);
  std::vector<Vec> kernel = nullspace_rref(num, tol);
  if (kernel.size() != static_cast<std::size_t>(multiplicity(tau, k)))
    throw ConsistencyError("kernel dimension disagrees with multiplicity");
  for (Vec& v : kernel) normalize_sign_fixed(v, tol);
  return kernel;
}

}  // namespace

std::vector<KernelVector> kernel_basis(int tau, int k, const PrecisionConfig& cfg) {
  PrecisionGuard g(cfg);
  std::vector<QtPair> support;
  std::vector<Vec> kernel = raw_kernel(tau, k, support, cfg);
  std::vector<KernelVector> out;
  for (std::size_t i = 0; i < kernel.size(); ++i)
    out.push_back(to_kernel_vector(tau, k, Gauge::RawZeta, static_cast<int>(i) + 1,
                                   support, kernel[i], cfg));
  return out;
}

std::vector<KernelVector> orthonormal_basis(int tau, int k,
                                            const PrecisionConfig& cfg) {
  PrecisionGuard g(cfg);
  std::vector<QtPair> support;
  std::vector<Vec> kernel = raw_kernel(tau, k, support, cfg);
  Real tol(cfg.rank_tolerance);
  gram_schmidt(kernel, tol);
  for (Vec& v : kernel) normalize_sign_fixed(v, tol);
  std::vector<KernelVector> out;
  for (std::size_t i = 0; i < kernel.size(); ++i)
    out.push_back(to_kernel_vector(tau, k, Gauge::Orthonormal,
                                   static_cast<int>(i) + 1, support, kernel[i], cfg));
  return out;
}

}  // namespace o5

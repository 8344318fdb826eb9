#include "o5/wigner.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <tuple>

#include "o5/canonical.hpp"
#include "o5/projection.hpp"

namespace o5 {

namespace {

// The bilinear sums re-evaluate the same orthonormal bases for every
// coefficient of a table row, so cache them per (tau, k, precision).
const std::vector<KernelVector>& cached_basis(int tau, int k,
                                              const PrecisionConfig& cfg) {
  static std::map<std::tuple<int, int, unsigned>, std::vector<KernelVector>> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_tuple(tau, k, cfg.decimal_digits);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, orthonormal_basis(tau, k, cfg)).first;
  return it->second;
}

std::map<QtPair, Real> coeff_map(const KernelVector& kv) {
  std::map<QtPair, Real> m;
  for (std::size_t j = 0; j < kv.support.size(); ++j)
    m[kv.support[j]] = kv.coeffs[j].value;
  return m;
}

// signed-radicand convention: sgn(r) * sqrt(|r|)
Real signed_sqrt(const Rational& r) {
  if (r < 0) return -sqrt(to_real(Rational(-r)));
  return sqrt(to_real(r));
}

// Validates a query. Returns false when the coefficient is structurally
// zero; throws DomainError on out-of-range mu or multiplicity indices.
bool selection(const WignerQuery& q) {
  if (q.mu < -2 || q.mu > 2) throw DomainError("wigner_o3: mu out of range");
  if (q.chi1 < 1 || q.chi < 1) throw DomainError("wigner_o3: multiplicity index < 1");
  if (q.tau < 0) throw DomainError("wigner_o3: negative seniority");
  if (q.kp != q.k1 + 2 - q.mu) return false;
  if (q.k1 < 0 || q.k1 > 2 * q.tau) return false;
  if (q.kp < 0 || q.kp > 2 * q.tau + 2) return false;
  int m1 = multiplicity(q.tau, q.k1);
  int m = multiplicity(q.tau + 1, q.kp);
  if (q.chi1 > std::max(1, m1) || q.chi > std::max(1, m))
    throw DomainError("wigner_o3: multiplicity index too large");
  if (m1 == 0 || m == 0) return false;
  // O(3) triangle for the stretched CG <L1 L1; 2 mu | L L>
  int L1 = 2 * q.tau - q.k1, L = 2 * q.tau + 2 - q.kp;
  if (L < std::abs(L1 - 2) || L > L1 + 2) return false;
  return true;
}

NumericValue zero(const PrecisionConfig& cfg) { return make_numeric(Real(0), cfg); }

struct Term {
  int dq, dt;  // bra support point (q + dq, t + dt)
  Rational (*rad)(long, long, long, long);  // (tau, k, q, t)
};

// Radicands of the per-mu bilinear sums; k is the ket level.
Rational rad_mu2(long T, long k, long q, long t) {
  return Rational((2 * T + 3 - t) * (2 * T - 2 * k + 2 * q - t + 2),
                  2 * (T + 1) * (2 * T + 3));
}
Rational rad_mu1_a(long T, long k, long q, long t) {
  return Rational((2 * T - k + 2) * (2 * T + 3 - t) * (2 * k - 2 * q + t + 3) *
                      (2 * k - 3 * q + 2 * t + 2) * (2 * k - 3 * q + 2 * t + 1),
                  2 * (T + 1) * (2 * T + 3) * (2 * T - k) * (2 * k - 2 * q + 1) *
                      (2 * k - 2 * q + 3));
}
Rational rad_mu1_b(long T, long k, long q, long t) {
  return Rational((2 * T - k + 2) * (2 * T - 2 * k + 2 * q - t + 2) * (t + 2) *
                      (q - 2 * t) * (q - 2 * t - 1),
                  2 * (T + 1) * (2 * T + 3) * (2 * T - k) * (2 * k - 2 * q + 1) *
                      (2 * k - 2 * q - 1));
}
Rational rad_mu0_a(long T, long k, long q, long t) {
  return Rational((4 * T - 2 * k + 3) * (2 * T + 3 - t) * (2 * T - k + 1) *
                      (2 * k - 2 * q + t + 3) * (2 * k - 3 * q + 2 * t + 1) *
                      (q - 2 * t + 1),
                  (T + 1) * (2 * T + 3) * (2 * T - k) * (4 * T - 2 * k - 1) *
                      (2 * k - 2 * q + 1) * (2 * k - 2 * q + 3));
}
Rational rad_mu0_b(long T, long k, long q, long t) {
  // the descending-r matrix element carries a negative sign
  return Rational(-(4 * T - 2 * k + 3) * (2 * T - k + 1) *
                      (2 * T - 2 * k + 2 * q - t + 2) * (t + 2) *
                      (2 * k - 3 * q + 2 * t) * (q - 2 * t),
                  (T + 1) * (2 * T + 3) * (4 * T - 2 * k - 1) * (2 * T - k) *
                      (2 * k - 2 * q + 1) * (2 * k - 2 * q - 1));
}
Rational rad_mum1_a(long T, long k, long q, long t) {
  return Rational((4 * T - 2 * k + 1) * (2 * T + 3 - t) * (2 * T - k + 1) *
                      (2 * k - 2 * q + t + 3) * (q - 2 * t + 1) *
                      (q - 2 * t + 2),
                  2 * (T + 1) * (2 * T + 3) * (2 * T - k - 1) *
                      (4 * T - 2 * k - 1) * (2 * k - 2 * q + 1) *
                      (2 * k - 2 * q + 3));
}
Rational rad_mum1_b(long T, long k, long q, long t) {
  return Rational((4 * T - 2 * k + 1) * (2 * T - k + 1) *
                      (2 * T - 2 * k + 2 * q - t + 2) * (t + 2) *
                      (2 * k - 3 * q + 2 * t) * (2 * k - 3 * q + 2 * t - 1),
                  2 * (T + 1) * (2 * T + 3) * (4 * T - 2 * k - 1) *
                      (2 * T - k - 1) * (2 * k - 2 * q + 1) *
                      (2 * k - 2 * q - 1));
}
Rational rad_mum2(long T, long k, long q, long t) {
  return Rational((4 * T - 2 * k + 1) * (2 * k - 2 * q + t + 3) * (t + 2),
                  2 * (T + 1) * (2 * T + 3) * (4 * T - 2 * k - 3));
}
Rational rad_mum2_as_printed(long T, long k, long q, long t) {
  (void)q;
  return Rational((4 * T - 2 * k + 1) * (4 * T - 2 * k + 1) * (t + 2),
                  2 * (T + 1) * (2 * T + 3) * (4 * T - 2 * k - 3));
}

NumericValue evaluate(const WignerQuery& q, const std::vector<Term>& terms,
                      const PrecisionConfig& cfg) {
  const KernelVector& ket = cached_basis(q.tau, q.k1, cfg)[q.chi1 - 1];
  std::map<QtPair, Real> bra = coeff_map(cached_basis(q.tau + 1, q.kp, cfg)[q.chi - 1]);
  Real sum = 0;
  for (std::size_t j = 0; j < ket.support.size(); ++j) {
    QtPair p = ket.support[j];
    for (const Term& tm : terms) {
      auto it = bra.find({p.q + tm.dq, p.t + tm.dt});
      if (it == bra.end()) continue;
      sum += it->second * ket.coeffs[j].value *
             signed_sqrt(tm.rad(q.tau, q.k1, p.q, p.t));
    }
  }
  return make_numeric(sum, cfg);
}

}  // namespace

NumericValue wigner_o3(const WignerQuery& q, const PrecisionConfig& cfg) {
  cfg.validate();
  PrecisionGuard guard(cfg);
  if (!selection(q)) return zero(cfg);
  switch (q.mu) {
    case 2:
      return evaluate(q, {{0, 0, rad_mu2}}, cfg);
    case 1:
      return evaluate(q, {{0, 0, rad_mu1_a}, {2, 2, rad_mu1_b}}, cfg);
    case 0:
      return evaluate(q, {{1, 0, rad_mu0_a}, {3, 2, rad_mu0_b}}, cfg);
    case -1:
      return evaluate(q, {{2, 0, rad_mum1_a}, {4, 2, rad_mum1_b}}, cfg);
    default:
      return evaluate(q, {{4, 2, rad_mum2}}, cfg);
  }
}

Real check_orthonormality(int tau, int chi, int kp, const PrecisionConfig& cfg) {
  cfg.validate();
  PrecisionGuard guard(cfg);
  Real sum = 0;
  for (int mu = -2; mu <= 2; ++mu) {
    int k1 = kp - 2 + mu;
    if (k1 < 0 || k1 > 2 * tau) continue;
    int m1 = multiplicity(tau, k1);
    for (int chi1 = 1; chi1 <= m1; ++chi1) {
      WignerQuery q{tau, chi1, k1, mu, chi, kp};
      Real w = wigner_o3(q, cfg).value;
      sum += w * w;
    }
  }
  return abs(sum - 1);
}

int exchange_phase(int L1, int L) { return (L1 + 2 - L) % 2 == 0 ? 1 : -1; }

NumericValue reversed_coupling(const WignerQuery& q, const PrecisionConfig& cfg) {
  cfg.validate();
  PrecisionGuard guard(cfg);
  NumericValue w = wigner_o3(q, cfg);
  int L1 = 2 * q.tau - q.k1, L = 2 * q.tau + 2 - q.kp;
  Rational factor(o5_dim(q.tau) * (2 * L + 1), o5_dim(q.tau + 1) * (2 * L1 + 1));
  Real v = exchange_phase(L1, L) * sqrt(to_real(factor)) * w.value;
  return make_numeric(v, cfg);
}

namespace detail {

NumericValue wigner_o3_general(const WignerQuery& q, const PrecisionConfig& cfg) {
  cfg.validate();
  PrecisionGuard guard(cfg);
  if (!selection(q)) return zero(cfg);
  const long L1 = 2 * q.tau - q.k1, L = 2 * q.tau + 2 - q.kp;
  // 1 / (sqrt(tau+1) <L1 L1; 2 mu | L L>) in closed form
  Rational pre2(factorial(2 * L1 + q.mu + 3) * factorial(2 * L1 + q.mu - 2),
                factorial(2 * L) * factorial(2 * L1) * (2 * L + 1) * (q.tau + 1));
  Real pre = sqrt(to_real(pre2));

  const KernelVector& ket = cached_basis(q.tau, q.k1, cfg)[q.chi1 - 1];
  const KernelVector& bra = cached_basis(q.tau + 1, q.kp, cfg)[q.chi - 1];
  Real sum = 0;
  for (std::size_t a = 0; a < bra.support.size(); ++a) {
    CanonicalLabel lb = state_label(q.tau + 1, q.kp, bra.support[a]);
    for (std::size_t b = 0; b < ket.support.size(); ++b) {
      CanonicalLabel lk = state_label(q.tau, q.k1, ket.support[b]);
      SqrtReal me = boson_matrix_element(q.mu, lb, lk, cfg);
      if (me.is_zero()) continue;
      sum += bra.coeffs[a].value * ket.coeffs[b].value * me.shadow;
    }
  }
  return make_numeric(pre * sum, cfg);
}

Real verify_formula_paths(const WignerQuery& q, const PrecisionConfig& cfg) {
  cfg.validate();
  PrecisionGuard guard(cfg);
  Real d = abs(wigner_o3(q, cfg).value - wigner_o3_general(q, cfg).value);
  if (d > pow10(-static_cast<long>(cfg.decimal_digits / 2)))
    throw ConsistencyError("per-mu and generic Wigner evaluations disagree");
  return d;
}

NumericValue wigner_o3_mu_m2_as_printed(const WignerQuery& q,
                                        const PrecisionConfig& cfg) {
  cfg.validate();
  PrecisionGuard guard(cfg);
  if (q.mu != -2) throw DomainError("as-printed variant exists only for mu = -2");
  if (!selection(q)) return zero(cfg);
  return evaluate(q, {{4, 2, rad_mum2_as_printed}}, cfg);
}

}  // namespace detail

}  // namespace o5

#include "o5/oracle.hpp"

#include <algorithm>
#include <utility>

#include "o5/linalg.hpp"
#include "o5/projection.hpp"

namespace o5 {

namespace {

Real sqrt_rat(const Rational& q) { return sqrt(to_real(q)); }

BosonTerm term(const Real& c, std::initializer_list<int> create_mu,
               std::initializer_list<int> annihilate_mu) {
  BosonTerm t;
  t.coeff = c;
  for (int mu : create_mu) ++t.create[mode_of(mu)];
  for (int mu : annihilate_mu) ++t.annihilate[mode_of(mu)];
  return t;
}

}  // namespace

FockVector act(const SparseOperator& op, const FockVector& v) {
  FockVector out;
  for (const BosonTerm& t : op.terms) {
    for (const auto& [state, amp] : v) {
      FockState s = state;
      Int prod = 1;
      bool ok = true;
      for (int m = 0; m < 5; ++m) {
        for (int i = 0; i < t.annihilate[m]; ++i) {
          if (s[m] == 0) {
            ok = false;
            break;
          }
          prod *= s[m];
          --s[m];
        }
        if (!ok) break;
      }
      if (!ok) continue;
      for (int m = 0; m < 5; ++m)
        for (int i = 0; i < t.create[m]; ++i) {
          ++s[m];
          prod *= s[m];
        }
      out[s] += t.coeff * amp * sqrt(Real(prod));
    }
  }
  return out;
}

Real fock_dot(const FockVector& a, const FockVector& b) {
  Real s = 0;
  const FockVector& small = a.size() <= b.size() ? a : b;
  const FockVector& large = a.size() <= b.size() ? b : a;
  for (const auto& [state, amp] : small) {
    auto it = large.find(state);
    if (it != large.end()) s += amp * it->second;
  }
  return s;
}

Real fock_norm(const FockVector& v) { return sqrt(fock_dot(v, v)); }

SparseOperator pairing_p1() {
  return {{term(sqrt_rat(2), {}, {1, -1}), term(-sqrt_rat(Rational(1, 2)), {}, {0, 0})}};
}

SparseOperator pairing_p1_dagger() {
  return {{term(sqrt_rat(2), {1, -1}, {}), term(-sqrt_rat(Rational(1, 2)), {0, 0}, {})}};
}

SparseOperator pairing_p2() {
  SparseOperator op;
  Real half = sqrt_rat(Rational(1, 2));
  for (int mu = -2; mu <= 2; ++mu)
    op.terms.push_back(term((mu % 2 == 0 ? half : -half), {}, {mu, -mu}));
  return op;
}

SparseOperator pairing_p2_alt() {
  SparseOperator op;
  op.terms.push_back(term(sqrt_rat(2), {}, {2, -2}));
  for (BosonTerm t : pairing_p1().terms) {
    t.coeff = -t.coeff;
    op.terms.push_back(t);
  }
  return op;
}

SparseOperator l_plus() {
  Real c = sqrt_rat(2);
  return {{term(c, {1}, {0}), term(c, {0}, {-1})}};
}

SparseOperator big_l_plus() {
  Real c3 = sqrt_rat(3), c2 = sqrt_rat(2);
  return {{term(c3, {1}, {0}), term(c3, {0}, {-1}), term(c2, {2}, {1}),
           term(c2, {-1}, {-2})}};
}

FockVector realize_canonical(const CanonicalLabel& s, const PrecisionConfig& cfg) {
  cfg.validate();
  PrecisionGuard guard(cfg);
  s.validate();
  const int r = s.r, mr = s.m_r, t = s.t();
  const int xi_max = std::min(t, 2 * s.mJ2 + t) / 2;
  SparseOperator p1d = pairing_p1_dagger();

  FockVector total;
  for (int xi = 0; xi <= xi_max; ++xi) {
    const int n2 = s.mJ2 + t / 2 - xi;    // b_2 occupation of the U(2) part
    const int nm2 = t / 2 - xi;           // b_-2 occupation
    // stretched triplet-mode state of angular momentum r, projection m_r
    FockVector v;
    for (int x = std::max(0, mr); r + mr - 2 * x >= 0; ++x) {
      const int n1 = x, n0 = r + mr - 2 * x, nm1 = x - mr;
      Int num = factorial(n1) * factorial(n0) * factorial(nm1);
      Int den = (Int(1) << x) * factorial(x - mr) * factorial(x) * factorial(n0);
      FockState st{n2, n1, n0, nm1, nm2};
      v[st] = sqrt(to_real(Rational(num))) / to_real(Rational(den));
    }
    for (int i = 0; i < xi; ++i) v = act(p1d, v);
    Rational pre2(
        (Int(1) << (r + mr)) * double_factorial(2 * r + 1) * factorial(r + mr) *
            factorial(r - mr) * factorial(r),
        factorial(xi) * double_factorial(2 * r + 2 * xi + 1) * factorial(2 * r));
    Real w = pair_ladder_coeff(s.tau, r, s.mJ2, xi, cfg).shadow * sqrt_rat(pre2);
    for (const auto& [state, amp] : v) total[state] += w * amp;
  }
  return total;
}

std::vector<FockState> sector(int n, int m) {
  std::vector<FockState> out;
  for (int n2 = 0; n2 <= n; ++n2)
    for (int n1 = 0; n1 + n2 <= n; ++n1)
      for (int n0 = 0; n0 + n1 + n2 <= n; ++n0)
        for (int nm1 = 0; nm1 + n0 + n1 + n2 <= n; ++nm1) {
          int nm2 = n - n2 - n1 - n0 - nm1;
          FockState s{n2, n1, n0, nm1, nm2};
          if (weight(s) == m) out.push_back(s);
        }
  return out;
}

namespace {

// Stacks the matrices of the given operators over the basis and returns an
// orthonormal basis of the joint kernel.
std::vector<FockVector> joint_kernel(const std::vector<FockState>& basis,
                                     const std::vector<SparseOperator>& ops,
                                     const PrecisionConfig& cfg) {
  // Image coordinates are collected per operator so different target
  // sectors never alias.
  std::map<std::pair<std::size_t, FockState>, std::size_t> row_index;
  std::vector<std::vector<std::pair<std::size_t, Real>>> col_entries(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    FockVector unit;
    unit[basis[j]] = 1;
    for (std::size_t oi = 0; oi < ops.size(); ++oi) {
      for (const auto& [state, amp] : act(ops[oi], unit)) {
        auto key = std::make_pair(oi, state);
        auto [it, inserted] = row_index.try_emplace(key, row_index.size());
        col_entries[j].emplace_back(it->second, amp);
      }
    }
  }

  Matrix m(row_index.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [i, amp] : col_entries[j]) m.at(i, j) += amp;

  Real tol = Real(cfg.rank_tolerance);
  std::vector<Vec> kernel = nullspace_rref(m, tol);
  if (!kernel.empty()) {
    gram_schmidt(kernel, tol);
    for (Vec& v : kernel) normalize_sign_fixed(v, tol);
  }

  std::vector<FockVector> out;
  out.reserve(kernel.size());
  for (const Vec& v : kernel) {
    FockVector fv;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (v[j] != 0) fv[basis[j]] = v[j];
    out.push_back(std::move(fv));
  }
  return out;
}

}  // namespace

std::vector<FockVector> seniority_highest_weight(int tau, int L,
                                                 const PrecisionConfig& cfg) {
  cfg.validate();
  PrecisionGuard guard(cfg);
  if (tau < 0 || L < 0) throw DomainError("seniority_highest_weight: negative labels");
  std::vector<FockState> basis = sector(tau, L);
  if (basis.empty()) return {};
  return joint_kernel(basis, {pairing_p2(), big_l_plus()}, cfg);
}

CrosscheckReport crosscheck(int tau, int k, const PrecisionConfig& cfg) {
  cfg.validate();
  PrecisionGuard guard(cfg);
  CrosscheckReport rep;
  rep.tau = tau;
  rep.k = k;
  rep.multiplicity_formula = multiplicity(tau, k);
  const int L = 2 * tau - k;

  std::vector<FockVector> oracle = seniority_highest_weight(tau, L);
  rep.multiplicity_oracle = static_cast<int>(oracle.size());
  if (rep.multiplicity_oracle != rep.multiplicity_formula)
    throw ConsistencyError("multiplicity disagrees with the Fock-space kernel");

  std::vector<KernelVector> proj = orthonormal_basis(tau, k, cfg);
  std::vector<FockVector> realized;
  realized.reserve(proj.size());
  for (const KernelVector& kv : proj) {
    FockVector u;
    for (std::size_t j = 0; j < kv.support.size(); ++j) {
      FockVector part = realize_canonical(state_label(tau, k, kv.support[j]), cfg);
      for (const auto& [state, amp] : part) u[state] += kv.coeffs[j].value * amp;
    }
    realized.push_back(std::move(u));
  }

  SparseOperator p2 = pairing_p2(), lp = big_l_plus();
  rep.max_p2_residual = 0;
  rep.max_lplus_residual = 0;
  rep.max_norm_error = 0;
  for (const FockVector& u : realized) {
    rep.max_p2_residual = std::max(rep.max_p2_residual, fock_norm(act(p2, u)));
    rep.max_lplus_residual = std::max(rep.max_lplus_residual, fock_norm(act(lp, u)));
    rep.max_norm_error = std::max(rep.max_norm_error, Real(abs(fock_norm(u) - 1)));
  }

  // Frobenius distance of the two orthogonal projectors, computed through
  // the per-vector residuals u - Q u (stable, no cancellation of 1 - <u|w>^2).
  Real dist2 = 0;
  for (const FockVector& u : realized) {
    FockVector res = u;
    for (const FockVector& w : oracle) {
      Real d = fock_dot(u, w);
      for (const auto& [state, amp] : w) res[state] -= d * amp;
    }
    Real rn = fock_norm(res);
    dist2 += 2 * rn * rn;
  }
  rep.subspace_distance = sqrt(dist2);

  Real bound = pow10(-static_cast<long>(cfg.decimal_digits / 2));
  if (rep.max_p2_residual > bound || rep.max_lplus_residual > bound ||
      rep.max_norm_error > bound || rep.subspace_distance > bound)
    throw ConsistencyError("projected basis fails the Fock-space cross-check");
  return rep;
}

}  // namespace o5

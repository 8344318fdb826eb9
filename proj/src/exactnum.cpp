#include "o5/exactnum.hpp"

#include <cmath>

#include <boost/multiprecision/number.hpp>

namespace o5 {

void PrecisionConfig::validate() const {
  if (decimal_digits < 20)
    throw DomainError("decimal_digits must be at least 20");
  if (rank_tolerance <= 0)
    throw DomainError("rank_tolerance must be positive");
  // The tolerance has to sit strictly between the shadow noise floor and the
  // half-precision scale used by the kernel acceptance criteria; anything
  // outside that band cannot make reliable rank decisions.
  double lg = std::log10(rank_tolerance);
  if (lg <= -static_cast<double>(decimal_digits) ||
      lg >= -static_cast<double>(decimal_digits) / 2)
    throw DomainError("rank_tolerance inconsistent with decimal_digits");
  if (reconstruct_denominator_bound < 2)
    throw DomainError("reconstruct_denominator_bound too small");
}

PrecisionGuard::PrecisionGuard(const PrecisionConfig& cfg) {
  cfg.validate();
  saved_ = Real::default_precision();
  Real::default_precision(cfg.decimal_digits);
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

Real to_real(const Rational& q) {
  Real num(numerator(q));
  Real den(denominator(q));
  return num / den;
}

Real pow10(long e) {
  Real ten(10);
  return pow(ten, static_cast<int>(e));
}

SqrtReal sqrt_real(int sign, const Rational& radicand,
                   const PrecisionConfig& cfg) {
  PrecisionGuard g(cfg);
  if (sign < -1 || sign > 1) throw DomainError("sign must be -1, 0 or +1");
  if (radicand < 0) throw DomainError("negative radicand");
  SqrtReal out;
  if (sign == 0 || radicand == 0) {
    out.sign = 0;
    out.radicand = 0;
    out.shadow = 0;
    return out;
  }
  out.sign = sign;
  out.radicand = radicand;
  out.shadow = sign * sqrt(to_real(radicand));
  return out;
}

SqrtReal from_rational(const Rational& q, const PrecisionConfig& cfg) {
  int s = q > 0 ? 1 : (q < 0 ? -1 : 0);
  return sqrt_real(s, q * q, cfg);
}

SqrtReal mul(const SqrtReal& a, const SqrtReal& b, const PrecisionConfig& cfg) {
  return sqrt_real(a.sign * b.sign, a.radicand * b.radicand, cfg);
}

std::optional<Rational> reconstruct_square(const Real& x,
                                           const PrecisionConfig& cfg) {
  PrecisionGuard g(cfg);
  Real y = x * x;
  Real eps = 10 * pow10(-static_cast<long>(cfg.decimal_digits));
  // continued-fraction convergents of y
  Int h0 = 1, k0 = 0;  // h_{-1}, k_{-1}
  Int h1 = 0, k1 = 1;  // h_{-2}, k_{-2}
  Real rem = y;
  for (int iter = 0; iter < 200; ++iter) {
    Real fl = floor(rem);
    Int a(fl.convert_to<Int>());
    Int h = a * h0 + h1;
    Int k = a * k0 + k1;
    if (k > cfg.reconstruct_denominator_bound) return std::nullopt;
    Rational cand(h, k);
    if (abs(y - to_real(cand)) <= eps) return cand;
    Real frac = rem - fl;
    if (frac == 0) return std::nullopt;  // exhausted exactly, no match
    h1 = h0; k1 = k0; h0 = h; k0 = k;
    rem = 1 / frac;
  }
  return std::nullopt;
}

NumericValue make_numeric(const Real& x, const PrecisionConfig& cfg) {
  NumericValue out;
  out.value = x;
  if (auto rad = reconstruct_square(x, cfg)) {
    int s = x > 0 ? 1 : (x < 0 ? -1 : 0);
    if (*rad == 0) s = 0;
    out.exact = sqrt_real(s, *rad, cfg);
  }
  return out;
}

Int factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative argument");
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

Int double_factorial(long n) {
  if (n < -1) throw DomainError("double factorial below -1");
  Int r = 1;
  for (long i = n; i >= 2; i -= 2) r *= i;
  return r;
}

}  // namespace o5

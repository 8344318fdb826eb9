#pragma once
// Exact-radical number support: sign * sqrt(rational) values carrying a
// high-precision floating shadow. Closed under multiplication only; any
// additive combination happens on the shadows.

#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace o5 {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};
struct ConsistencyError : std::runtime_error {
  explicit ConsistencyError(const std::string& m) : std::runtime_error(m) {}
};
struct PrecisionError : std::runtime_error {
  explicit PrecisionError(const std::string& m) : std::runtime_error(m) {}
};

struct PrecisionConfig {
  unsigned decimal_digits = 60;
  // pivot threshold for rank decisions, relative to the largest matrix entry
  double rank_tolerance = 1e-40;
  // largest denominator attempted when reconstructing exact radicands
  Int reconstruct_denominator_bound = Int("1000000000000000000");

  void validate() const;  // throws DomainError on inconsistent settings
};

// Sets the thread-local mpfr working precision for the enclosing scope.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(const PrecisionConfig& cfg);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

// sign * sqrt(radicand), radicand >= 0.
struct SqrtReal {
  int sign = 0;  // -1, 0, +1
  Rational radicand = 0;
  Real shadow = 0;

  bool is_zero() const { return sign == 0; }
};

SqrtReal sqrt_real(int sign, const Rational& radicand,
                   const PrecisionConfig& cfg = {});
// sign(q) * sqrt(q^2): embeds an exact rational
SqrtReal from_rational(const Rational& q, const PrecisionConfig& cfg = {});
SqrtReal mul(const SqrtReal& a, const SqrtReal& b,
             const PrecisionConfig& cfg = {});

// Attempts to recognize x as sign*sqrt(p/q) by rational reconstruction of
// x^2 (continued-fraction convergents, denominators up to the configured
// bound). Returns the radicand p/q on success.
std::optional<Rational> reconstruct_square(const Real& x,
                                           const PrecisionConfig& cfg = {});

// A numeric result whose float shadow is authoritative; `exact` is filled
// when reconstruction succeeds.
struct NumericValue {
  Real value;
  std::optional<SqrtReal> exact;
};

NumericValue make_numeric(const Real& x, const PrecisionConfig& cfg = {});

Int factorial(long n);         // n >= 0, else DomainError
Int double_factorial(long n);  // n >= -1 ((-1)!! = 0!! = 1), else DomainError

Real to_real(const Rational& q);
Real pow10(long e);  // 10^e at current working precision

}  // namespace o5

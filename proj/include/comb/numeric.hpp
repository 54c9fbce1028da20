// Core numeric types shared by all modules: arbitrary-precision rationals
// (GMP) for the exact oracles and variable-precision reals (MPFR) for
// everything evaluated in the complex plane or in log-space.
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace comb {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_on>;
using Rational = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

// Domain violation (bad argument, no formula exists): CLI exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Request exceeds a configured feasibility cap: CLI exit code 3.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Internal tolerance not met (quadrature stagnation, residual imaginary
// part too large, ...): CLI exit code 4.
struct ToleranceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Working mantissa for Real. All modules read the process-wide default;
// values constructed before a precision change keep their own precision.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

// Scoped precision bump, used by tests that probe conditioning floors.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits) : saved_(precision_bits()) { set_precision_bits(bits); }
  ~PrecisionGuard() { set_precision_bits(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

Real to_real(const Rational& q);

// log(num) - log(den); handles numerators/denominators far beyond double
// range. Returns -inf for q == 0, throws for q < 0.
Real log_rational(const Rational& q);

// True iff the denominator of q (canonical form) is a power of two.
bool is_dyadic(const Rational& q);

// Generalized binomial coefficients C(1/2, n) and C(-1/2, n), exact.
Rational binom_half(unsigned n);
Rational binom_neg_half(unsigned n);

// C(h, m) as an exact integer.
Int binom_int(unsigned long h, unsigned long m);

// Fixed 17-significant-digit lowercase scientific rendering used by every
// machine-readable emitter (byte-stable across runs).
std::string format_real(const Real& x);

}  // namespace comb

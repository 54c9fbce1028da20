#include "comb/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <cstdio>

namespace comb {

namespace {
unsigned g_bits = 113;

unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.3010299956639812)) + 1;
}
}  // namespace

void set_precision_bits(unsigned bits) {
  if (bits < 24) throw ValidationError("precision must be at least 24 bits");
  g_bits = bits;
  Real::default_precision(bits_to_digits10(bits));
}

unsigned precision_bits() { return g_bits; }

Real to_real(const Rational& q) {
  return Real(Int(numerator(q))) / Real(Int(denominator(q)));
}

Real log_rational(const Rational& q) {
  if (q < 0) throw ValidationError("log_rational: negative argument");
  if (q == 0) return -std::numeric_limits<Real>::infinity();
  Real ln = log(Real(Int(numerator(q))));
  Real ld = log(Real(Int(denominator(q))));
  return ln - ld;
}

bool is_dyadic(const Rational& q) {
  Int den = denominator(q);
  if (den <= 0) return false;
  while (den % 2 == 0) den /= 2;
  return den == 1;
}

Rational binom_half(unsigned n) {
  // C(1/2, n) = prod_{j=0}^{n-1} (1/2 - j) / n!
  Rational r = 1;
  for (unsigned j = 0; j < n; ++j) {
    r *= Rational(1 - 2 * static_cast<long>(j), 2);
    r /= static_cast<long>(j) + 1;
  }
  return r;
}

Rational binom_neg_half(unsigned n) {
  Rational r = 1;
  for (unsigned j = 0; j < n; ++j) {
    r *= Rational(-1 - 2 * static_cast<long>(j), 2);
    r /= static_cast<long>(j) + 1;
  }
  return r;
}

Int binom_int(unsigned long h, unsigned long m) {
  if (m > h) return 0;
  Int r;
  mpz_bin_uiui(r.backend().data(), h, m);
  return r;
}

std::string format_real(const Real& x) {
  // 17 significant digits round-trips the double projection exactly; using
  // the double keeps output independent of the working mpfr precision.
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.16e", static_cast<double>(x));
  return buf;
}

}  // namespace comb

// Second independent oracle: extract p^{(2n)} as coefficients of the
// closed-form generating functions
//
//   G(z)      = sqrt(2) / sqrt(1 - z + sqrt(1-z))          (backbone origin)
//   F1^2(z)   = (2 - z - 2 sqrt(1-z)) / z                  (tooth direction)
//   F2^2(z)   = (1 + sqrt(1-z) - sqrt(2) sqrt(1 - z + sqrt(1-z)))^2 / z
//
// realized with truncated power-series arithmetic.  The coefficient of z^n
// in G * (F^2)^k is p^{(2n)} from (0, 2k) resp. (2k, 0) to the origin.
//
// Exact mode works over Rational (every series involved here has rational
// coefficients once the radicals are arranged as below); float mode runs
// the same algorithms over Real for large truncation orders.
#pragma once

#include "comb/complexval.hpp"
#include "comb/numeric.hpp"

#include <cstddef>
#include <vector>

namespace comb::series {

namespace detail {
inline Rational scalar_sqrt(const Rational& a) {
  Int n = numerator(a), d = denominator(a);
  if (a < 0) throw ValidationError("series sqrt: negative constant term");
  Int sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d)
    throw ValidationError("series sqrt: constant term is not a rational square");
  return Rational(sn, sd);
}
inline Real scalar_sqrt(const Real& a) {
  if (a <= 0) throw ValidationError("series sqrt: non-positive constant term");
  return sqrt(a);
}
Cx principal_sqrt_scalar(const Cx& w);  // defined in green_eval
inline Cx scalar_sqrt(const Cx& a) { return principal_sqrt_scalar(a); }

inline Rational scalar_log(const Rational& a) {
  if (a != 1) throw ValidationError("series log: exact mode requires unit constant term");
  return 0;
}
inline Real scalar_log(const Real& a) {
  if (a <= 0) throw ValidationError("series log: non-positive constant term");
  return log(a);
}
inline Cx scalar_log(const Cx& a) { return log(a); }

inline bool is_zero(const Rational& a) { return a == 0; }
inline bool is_zero(const Real& a) { return a == 0; }
inline bool is_zero(const Cx& a) { return a.re == 0 && a.im == 0; }
}  // namespace detail

// Coefficients c[0..N] of a series truncated at order N.  All binary
// operations require equal truncation orders.
template <class T>
struct PowerSeries {
  std::vector<T> c;

  PowerSeries() = default;
  explicit PowerSeries(std::size_t order) : c(order + 1, T(0)) {}

  std::size_t order() const { return c.size() - 1; }
  const T& operator[](std::size_t i) const { return c[i]; }
  T& operator[](std::size_t i) { return c[i]; }

  static PowerSeries constant(std::size_t order, T v) {
    PowerSeries s(order);
    s.c[0] = std::move(v);
    return s;
  }
  static PowerSeries one(std::size_t order) { return constant(order, T(1)); }
  // The series z.
  static PowerSeries var(std::size_t order) {
    PowerSeries s(order);
    if (order >= 1) s.c[1] = T(1);
    return s;
  }
};

template <class T>
void check_same_order(const PowerSeries<T>& a, const PowerSeries<T>& b) {
  if (a.order() != b.order())
    throw ValidationError("power series operands must have equal truncation orders");
}

template <class T>
PowerSeries<T> add(const PowerSeries<T>& a, const PowerSeries<T>& b) {
  check_same_order(a, b);
  PowerSeries<T> r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

template <class T>
PowerSeries<T> sub(const PowerSeries<T>& a, const PowerSeries<T>& b) {
  check_same_order(a, b);
  PowerSeries<T> r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

template <class T, class S>
PowerSeries<T> scale(const PowerSeries<T>& a, const S& s) {
  PowerSeries<T> r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) r.c[i] = a.c[i] * s;
  return r;
}

// Cauchy product truncated at the common order.
template <class T>
PowerSeries<T> mul(const PowerSeries<T>& a, const PowerSeries<T>& b) {
  check_same_order(a, b);
  std::size_t n = a.order();
  PowerSeries<T> r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (detail::is_zero(a.c[i])) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

// s with s*s = a (mod z^{N+1}); coefficient recursion, requires a positive
// (exact mode: perfect-square rational) constant term.
template <class T>
PowerSeries<T> sqrt(const PowerSeries<T>& a) {
  if (detail::is_zero(a.c[0]))
    throw ValidationError("series sqrt: constant term must be strictly positive");
  std::size_t n = a.order();
  PowerSeries<T> s(n);
  s.c[0] = detail::scalar_sqrt(a.c[0]);
  T two_s0 = s.c[0] + s.c[0];
  for (std::size_t m = 1; m <= n; ++m) {
    T acc = a.c[m];
    for (std::size_t i = 1; i < m; ++i) acc -= s.c[i] * s.c[m - i];
    s.c[m] = acc / two_s0;
  }
  return s;
}

// 1/a (mod z^{N+1}); requires a nonzero constant term.
template <class T>
PowerSeries<T> reciprocal(const PowerSeries<T>& a) {
  if (detail::is_zero(a.c[0]))
    throw ValidationError("series reciprocal: zero constant term");
  std::size_t n = a.order();
  PowerSeries<T> q(n);
  q.c[0] = T(1) / a.c[0];
  for (std::size_t m = 1; m <= n; ++m) {
    T acc = T(0);
    for (std::size_t i = 1; i <= m; ++i) acc += a.c[i] * q.c[m - i];
    q.c[m] = -acc / a.c[0];
  }
  return q;
}

// log(a) (mod z^{N+1}) via (log a)' = a'/a.  Exact mode requires a0 == 1.
template <class T>
PowerSeries<T> log(const PowerSeries<T>& a) {
  std::size_t n = a.order();
  PowerSeries<T> l(n);
  l.c[0] = detail::scalar_log(a.c[0]);
  for (std::size_t m = 1; m <= n; ++m) {
    T acc = a.c[m] * T(static_cast<long>(m));
    for (std::size_t i = 1; i < m; ++i) acc -= a.c[i] * l.c[m - i] * T(static_cast<long>(m - i));
    l.c[m] = acc / (a.c[0] * T(static_cast<long>(m)));
  }
  return l;
}

// a / z^shift; the dropped low-order coefficients must vanish.  The result
// has truncation order a.order() - shift (callers over-size the numerator).
template <class T>
PowerSeries<T> shift_down(const PowerSeries<T>& a, std::size_t shift) {
  if (shift > a.order()) throw ValidationError("shift_down: shift exceeds order");
  for (std::size_t i = 0; i < shift; ++i) {
    if (!detail::is_zero(a.c[i]))
      throw ValidationError("shift_down: nonzero low-order coefficient");
  }
  PowerSeries<T> r(a.order() - shift);
  for (std::size_t i = shift; i <= a.order(); ++i) r.c[i - shift] = a.c[i];
  return r;
}

template <class T>
PowerSeries<T> pow_int(const PowerSeries<T>& a, unsigned long k) {
  PowerSeries<T> r = PowerSeries<T>::one(a.order());
  PowerSeries<T> base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    if ((k >>= 1) != 0) base = mul(base, base);
  }
  return r;
}

// --- generating functions ------------------------------------------------

// sqrt(1 - z) as a series: sum_n C(1/2, n) (-z)^n.
template <class T>
PowerSeries<T> sqrt_one_minus_z(std::size_t order);

// G(z); coefficient n is p^{(2n)}(o, o).
PowerSeries<Rational> green_series_origin(std::size_t order);
PowerSeries<Real> green_series_origin_f(std::size_t order);

// F1^2(z): constant term 0, leading coefficient 1/4.
PowerSeries<Rational> f1sq_series(std::size_t order);
PowerSeries<Real> f1sq_series_f(std::size_t order);

// F2^2(z): the square cancels the lone sqrt(z), leaving a true power
// series with zero constant term and rational coefficients:
//   F2^2 = ((1+s)^2 + 2(1-z+s) - 2 sqrt(2(1-z+s)(1+s)^2)) / z,  s = sqrt(1-z).
PowerSeries<Rational> f2sq_series(std::size_t order);
PowerSeries<Real> f2sq_series_f(std::size_t order);

// G * (F1^2)^k; coefficient n is p^{(2n)}((0, 2k) -> o).
PowerSeries<Rational> prob_series_y(unsigned long k, std::size_t order);
PowerSeries<Real> prob_series_y_f(unsigned long k, std::size_t order);

// G * (F2^2)^k; coefficient n is p^{(2n)}((2k, 0) -> o).
PowerSeries<Rational> prob_series_x(unsigned long k, std::size_t order);
PowerSeries<Real> prob_series_x_f(unsigned long k, std::size_t order);

// Horner evaluation of the truncated series.
Real eval_series(const PowerSeries<Real>& s, const Real& z);
Cx eval_series(const PowerSeries<Real>& s, const Cx& z);

}  // namespace comb::series

// Minimal complex arithmetic over the variable-precision Real.  std::complex
// is not specified for user-defined floating types, and the branch rules here
// (arg in [-pi, pi), continuity from the upper half-plane on the cut) must be
// under our control anyway.
#pragma once

#include "comb/numeric.hpp"

namespace comb {

struct Cx {
  Real re{0};
  Real im{0};

  Cx() = default;
  Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Cx(Real r) : re(std::move(r)) {}
  explicit Cx(long r) : re(r) {}
  explicit Cx(int r) : re(r) {}

  bool is_real() const { return im == 0; }
};

inline Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
inline Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
inline Cx operator-(const Cx& a) { return {-a.re, -a.im}; }
inline Cx operator*(const Cx& a, const Cx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Cx operator*(const Real& s, const Cx& a) { return {s * a.re, s * a.im}; }
inline Cx operator*(const Cx& a, const Real& s) { return {a.re * s, a.im * s}; }
inline Cx operator+(const Real& s, const Cx& a) { return {s + a.re, a.im}; }
inline Cx operator+(const Cx& a, const Real& s) { return {a.re + s, a.im}; }
inline Cx operator-(const Real& s, const Cx& a) { return {s - a.re, -a.im}; }
inline Cx operator-(const Cx& a, const Real& s) { return {a.re - s, a.im}; }

inline Cx& operator+=(Cx& a, const Cx& b) {
  a.re += b.re;
  a.im += b.im;
  return a;
}
inline Cx& operator-=(Cx& a, const Cx& b) {
  a.re -= b.re;
  a.im -= b.im;
  return a;
}
inline Cx& operator*=(Cx& a, const Cx& b) {
  a = a * b;
  return a;
}

inline Real abs2(const Cx& a) { return a.re * a.re + a.im * a.im; }
inline Real abs(const Cx& a) { return sqrt(abs2(a)); }
inline Cx conj(const Cx& a) { return {a.re, -a.im}; }

inline Cx operator/(const Cx& a, const Cx& b) {
  Real d = abs2(b);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline Cx operator/(const Cx& a, const Real& s) { return {a.re / s, a.im / s}; }
inline Cx operator/(const Real& s, const Cx& b) { return Cx(s) / b; }

// Principal argument in (-pi, pi]; atan2(+0, x<0) = +pi.
inline Real arg(const Cx& a) { return atan2(a.im, a.re); }

inline Cx exp(const Cx& a) {
  Real m = exp(a.re);
  return {m * cos(a.im), m * sin(a.im)};
}

// Principal log: log|z| + i arg(z), arg in (-pi, pi].  Safe for integer
// powers exp(k*log(z)) regardless of the branch choice on the axis.
inline Cx log(const Cx& a) { return {log(abs(a)), arg(a)}; }

inline Cx pow_int(Cx base, long k) {
  if (k < 0) return Cx(Real(1)) / pow_int(base, -k);
  Cx r{Real(1), Real(0)};
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

}  // namespace comb

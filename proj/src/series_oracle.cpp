#include "comb/series_oracle.hpp"

namespace comb::series {

namespace {

template <class T>
PowerSeries<T> sqrt_one_minus_z_impl(std::size_t order) {
  PowerSeries<T> s(order);
  // C(1/2, n) (-1)^n, built by the ratio recurrence to stay O(N).
  Rational coef = 1;
  s.c[0] = T(1);
  for (std::size_t n = 1; n <= order; ++n) {
    // C(1/2,n)/C(1/2,n-1) = (1/2 - (n-1)) / n; extra (-1) for (-z)^n.
    coef *= Rational(-(1 - 2 * (static_cast<long>(n) - 1)), 2 * static_cast<long>(n));
    if constexpr (std::is_same_v<T, Rational>) {
      s.c[n] = coef;
    } else {
      s.c[n] = T(to_real(coef));
    }
  }
  return s;
}

// Shared scaffolding for the closed forms: s = sqrt(1-z), w = 1 - z + s.
template <class T>
struct Radicals {
  PowerSeries<T> s, w;
  explicit Radicals(std::size_t order) : s(sqrt_one_minus_z_impl<T>(order)), w(order) {
    w = s;
    w.c[0] += T(1);
    if (order >= 1) w.c[1] -= T(1);
  }
};

template <class T>
PowerSeries<T> green_impl(std::size_t order) {
  Radicals<T> r(order);
  // G^2 = 2 / (1 - z + s) has constant term 1, so G = sqrt(2/w) stays in
  // the coefficient field.
  PowerSeries<T> g2 = scale(reciprocal(r.w), T(2));
  return sqrt(g2);
}

template <class T>
PowerSeries<T> f1sq_impl(std::size_t order) {
  // (2 - z - 2s)/z with the numerator expanded one order higher.
  Radicals<T> r(order + 1);
  PowerSeries<T> num = scale(r.s, T(-2));
  num.c[0] += T(2);
  num.c[1] -= T(1);
  return shift_down(num, 1);
}

template <class T>
PowerSeries<T> f2sq_impl(std::size_t order) {
  // F2^2 * z = (1 + s - sqrt(2) t)^2 with t = sqrt(1 - z + s).  Expanding
  // the square as (1+s)^2 + 2t^2 - 2 sqrt(2 t^2 (1+s)^2) keeps every
  // intermediate rational; the sqrt argument has constant term 16.
  std::size_t n = order + 1;
  Radicals<T> r(n);
  PowerSeries<T> one_plus_s = r.s;
  one_plus_s.c[0] += T(1);
  PowerSeries<T> sq = mul(one_plus_s, one_plus_s);
  PowerSeries<T> cross = sqrt(scale(mul(r.w, sq), T(2)));
  PowerSeries<T> num = add(sq, scale(r.w, T(2)));
  num = sub(num, scale(cross, T(2)));
  return shift_down(num, 1);
}

template <class T>
PowerSeries<T> prob_y_impl(unsigned long k, std::size_t order) {
  if (k == 0) return green_impl<T>(order);
  return mul(green_impl<T>(order), pow_int(f1sq_impl<T>(order), k));
}

template <class T>
PowerSeries<T> prob_x_impl(unsigned long k, std::size_t order) {
  if (k == 0) return green_impl<T>(order);
  return mul(green_impl<T>(order), pow_int(f2sq_impl<T>(order), k));
}

}  // namespace

template <class T>
PowerSeries<T> sqrt_one_minus_z(std::size_t order) {
  return sqrt_one_minus_z_impl<T>(order);
}
template PowerSeries<Rational> sqrt_one_minus_z<Rational>(std::size_t);
template PowerSeries<Real> sqrt_one_minus_z<Real>(std::size_t);

PowerSeries<Rational> green_series_origin(std::size_t order) { return green_impl<Rational>(order); }
PowerSeries<Real> green_series_origin_f(std::size_t order) { return green_impl<Real>(order); }

PowerSeries<Rational> f1sq_series(std::size_t order) { return f1sq_impl<Rational>(order); }
PowerSeries<Real> f1sq_series_f(std::size_t order) { return f1sq_impl<Real>(order); }

PowerSeries<Rational> f2sq_series(std::size_t order) { return f2sq_impl<Rational>(order); }
PowerSeries<Real> f2sq_series_f(std::size_t order) { return f2sq_impl<Real>(order); }

PowerSeries<Rational> prob_series_y(unsigned long k, std::size_t order) {
  return prob_y_impl<Rational>(k, order);
}
PowerSeries<Real> prob_series_y_f(unsigned long k, std::size_t order) {
  return prob_y_impl<Real>(k, order);
}

PowerSeries<Rational> prob_series_x(unsigned long k, std::size_t order) {
  return prob_x_impl<Rational>(k, order);
}
PowerSeries<Real> prob_series_x_f(unsigned long k, std::size_t order) {
  return prob_x_impl<Real>(k, order);
}

Real eval_series(const PowerSeries<Real>& s, const Real& z) {
  Real acc = 0;
  for (std::size_t i = s.c.size(); i-- > 0;) acc = acc * z + s.c[i];
  return acc;
}

Cx eval_series(const PowerSeries<Real>& s, const Cx& z) {
  Cx acc(Real(0));
  for (std::size_t i = s.c.size(); i-- > 0;) acc = acc * z + Cx(s.c[i]);
  return acc;
}

}  // namespace comb::series

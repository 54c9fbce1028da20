// Every asymptotic estimate of p^{(2n)}(2k -> o) along the two comb axes,
// the special integral functions appearing in the small-xi regimes, and the
// regime dispatcher.  All estimates are carried in log-space; `value` is
// exp(log_value) materialized in extended precision.
#pragma once

#include "comb/axis.hpp"
#include "comb/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace comb::asym {

enum class Regime {
  Y_BULK,
  Y_MID,
  Y_SMALL,
  Y_TINY,
  X_BULK,
  X_MID,
  X_CROSSOVER,
  X_SMALL,
  X_TINY,
  LOCAL,
};

const char* to_string(Regime r);

struct Params {
  Real a{Real(1) / 20};        // bulk/small split
  Real c{Real(1) / 20};        // upper cutoff 1 - c
  Real alpha{Real(1) / 4};     // contour segment half-length
  Real epsilon{Real(1) / 20};  // regime-boundary exponent tweak
  Real quad_tol{Real("1e-12")};
  // Breakpoint constant of the crossover integral indicator (theta* = kappa/t).
  Real kappa_crossover{0};  // 0 -> default 2^{7/6} * 3 / (sqrt(3)-1)
  // Relative xi-distance within which the dispatcher reports the adjacent
  // regime's estimate as well.
  Real boundary_band{Real(1) / 50};
};

struct EstimateResult {
  Real log_value;
  Real value;
  Regime regime;
  std::string formula;
  // Secondary estimate when xi sits within boundary_band of a regime edge.
  std::optional<std::pair<Regime, Real>> alternate;
};

// Fixed-pair local limit at the origin of the d-comb for an even number of
// steps (0 for odd):  d 2^{1/2^d} / Gamma(1/2^d) * n^{1/2^d - 1}
// (equals 2^{1/2^d + 1}/Gamma(1/2^d) at d = 2).
Real local_limit(int d, std::int64_t n_steps);
// General-pair variant carrying the deg(y) factor: 2^{1/2^d - 1} deg(y) / Gamma(1/2^d).
Real local_limit_pair(int d, int deg_target, std::int64_t n_steps);

// I(t) = \int_R e^{-q^2/2} sqrt(sqrt(t^2 + q^2/2) + t) dq; increasing,
// I(0) = sqrt(2) Gamma(3/4), I(t) ~ 2 sqrt(pi t) at infinity.
Real integral_y(const Real& t, const Real& tol = Real("1e-12"));

// I(t) = \int_0^inf exp(-2^{4/3} t q^3 - q^4) [cos(...) (...) + sin(...) (...)] dq
// from the quartic substitution; I(0) = Gamma(3/4)/4, positive on [0, 1].
Real integral_x(const Real& t, const Real& tol = Real("1e-12"));

// Crossover integral with the sign-switch indicator at theta = kappa/t.
Real integral_x_crossover(const Real& t, const Real& kappa = Real(0), const Real& tol = Real("1e-12"));

// \int_0^inf e^{-q^2/2} cos(pi/6 - (sqrt(3)/2) q^2) dq  (= sqrt(pi)/2).
Real halfline_gaussian_cos(const Real& tol = Real("1e-12"));

// Individual formulas, log-space.  xi = k/n throughout.
Real y_gaussian_log(std::int64_t k, std::int64_t n);  // bulk/mid closed form
Real y_small_log(std::int64_t k, std::int64_t n, const Real& tol = Real("1e-12"));
Real tiny_log(Axis axis, std::int64_t k, std::int64_t n);
Real x_bulk_log(std::int64_t k, std::int64_t n);
Real x_mid_log(std::int64_t k, std::int64_t n, const Real& tol = Real("1e-12"));
Real x_crossover_log(std::int64_t k, std::int64_t n, const Real& kappa = Real(0),
                     const Real& tol = Real("1e-12"));
Real x_small_log(std::int64_t k, std::int64_t n, const Real& tol = Real("1e-12"));

EstimateResult estimate_y(std::int64_t k, std::int64_t n, const Params& params = {});
EstimateResult estimate_x(std::int64_t k, std::int64_t n, const Params& params = {});
EstimateResult dispatch(Axis axis, std::int64_t k, std::int64_t n, const Params& params = {});

}  // namespace comb::asym

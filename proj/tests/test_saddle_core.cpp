// Saddle points, rate functions, and Taylor machinery for both axes.
// Ground truth throughout: high-order finite differences of the auxiliary
// functions and series composition of their defining expressions.
#include <doctest.h>

#include "comb/green_eval.hpp"
#include "comb/saddle_core.hpp"
#include "comb/series_oracle.hpp"

#include <boost/math/constants/constants.hpp>

#include <random>

using namespace comb;
using namespace comb::saddle;

namespace {
// Computed on first use, after main() has set the working precision.
const Real& test_pi() {
  static const Real v = boost::math::constants::pi<Real>();
  return v;
}
}

TEST_CASE("psi_y at distinguished points") {
  // phi(1/2) = log((1/2)^{-1/2} (3/2)^{-3/2}).
  Real phi_half = phi_y(Real(1) / 2);
  CHECK(fabs(phi_half - Real("-0.26162407188227391826")) < Real("1e-18"));
  CHECK(fabs(psi_y(Real(3) / 4, Real(1) / 2) - phi_half) < Real("1e-30"));
  // psi_y(1, xi) -> 0: both logs vanish at z = 1.
  Cx at_one = psi_y(Cx(Real(1)), Real("0.3"));
  CHECK(abs(at_one) < Real("1e-30"));
}

TEST_CASE("exp(n psi) reproduces F^{2k}/z^n for both axes") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.05, 0.9);
  for (int trial = 0; trial < 25; ++trial) {
    // Random z in (0,1) x small imaginary offset keeps us off the cut.
    Cx z{Real(u(rng)), Real(u(rng) / 7 - 0.05)};
    long n = 1 + trial % 5;
    long k = trial % (n + 1);
    Real xi = Real(k) / Real(n);
    {
      Cx lhs = exp(Real(n) * psi_y(z, xi));
      Cx rhs = pow_int(green::eval_f1_sq(z), k) / pow_int(z, n);
      CHECK(abs(lhs - rhs) <= Real("1e-25") * abs(rhs));
    }
    {
      Cx lhs = exp(Real(n) * psi_x(z, xi));
      Cx rhs = pow_int(green::eval_f2_sq(z), k) / pow_int(z, n);
      CHECK(abs(lhs - rhs) <= Real("1e-25") * abs(rhs));
    }
  }
}

TEST_CASE("psi_x basics") {
  // xi = 0 limit: psi_x(z, 0) = -log z.
  for (double zd : {0.2, 0.5, 0.8}) {
    CHECK(fabs(psi_x(Real(zd), Real(0)) + log(Real(zd))) < Real("1e-30"));
  }
  // Real and finite along (0,1).
  for (int i = 1; i < 40; ++i) {
    Real z = Real(i) / 40;
    Real v = psi_x(z, Real("0.37"));
    CHECK(boost::math::isfinite(v));
  }
}

TEST_CASE("saddle_y closed forms (z0 = 1 - xi^2 and derivatives)") {
  SaddleData s = saddle_y(Real(1) / 2);
  CHECK(s.z0 == Real(3) / 4);
  CHECK(fabs(s.psi2 - Real(8) / 3) < Real("1e-30"));
  // Numerical second derivative agrees.
  CHECK(fabs(psi2_fd(Axis::Y, Real(1) / 2) / s.psi2 - 1) < Real("1e-6"));
  CHECK(saddle_residual(Axis::Y, Real(1) / 2) < Real("1e-12"));
}

TEST_CASE("saddle_x: cubic root, small-xi law, residual, psi2") {
  // u0 / (2^{-1/3} xi^{2/3}) -> 1 as xi -> 0.
  Real xi_small("1e-6");
  Real ratio = u0_x(xi_small) / (pow(Real(2), Real(-1) / 3) * cbrt(xi_small * xi_small));
  CHECK(fabs(ratio - 1) < Real("1e-3"));

  CHECK(saddle_residual(Axis::X, Real("0.1")) < Real("1e-12"));

  SaddleData s = saddle_x(Real("0.1"));
  Real fd = psi2_fd(Axis::X, Real("0.1"));
  CHECK(fabs(fd / s.psi2 - 1) < Real("1e-6"));
  // The alternative printed form in terms of z0 is the same number.
  Real alt = (1 + 2 * s.z0 - sqrt(1 - s.z0)) / (4 * s.z0 * s.z0 * (1 - s.z0));
  CHECK(fabs(alt / s.psi2 - 1) < Real("1e-25"));
}

TEST_CASE("saddle residual below 1e-12 on 200-point grids, both axes") {
  for (int i = 1; i <= 200; ++i) {
    Real xi = Real(i) / 201;
    CHECK(saddle_residual(Axis::Y, xi) < Real("1e-12"));
    CHECK(saddle_residual(Axis::X, xi) < Real("1e-12"));
  }
}

TEST_CASE("rate functions: small-xi laws and monotone decrease") {
  // phi_y(xi)/(-xi^2) -> 1.
  Real xi("1e-3");
  CHECK(fabs(phi_y(xi) / (-xi * xi) - 1) < Real("0.01"));
  // phi_x(xi)/(-C xi^{4/3}) -> 1 with the frozen constant C = 3/2^{2/3}.
  Real c_rate = Real(3) / pow(Real(2), Real(2) / 3);
  CHECK(fabs(phi_x(xi) / (-c_rate * xi * cbrt(xi)) - 1) < Real("0.01"));
  // Monotone decrease on (0, 0.95].
  Real prev_y = 0, prev_x = 0;
  for (int i = 1; i <= 95; ++i) {
    Real x = Real(i) / 100;
    Real py = phi_y(x), px = phi_x(x);
    CHECK(py < prev_y);
    CHECK(px < prev_x);
    prev_y = py;
    prev_x = px;
  }
}

TEST_CASE("y-axis Taylor expansion of psi-bar") {
  Real a("0.05"), alpha("0.25");
  // t = 0 gives phi.
  YTaylor t0 = y_taylor(Real("0.03"), Real(0), a, alpha);
  CHECK(abs(t0.value - Cx(phi_y(Real("0.03")))) < Real("1e-30"));
  // Quadratic coefficient is -1/(1 - xi^2).
  Real xi("0.02"), h("1e-8");
  Cx plus = y_taylor(xi, h, a, alpha).value;
  Cx minus = y_taylor(xi, -h, a, alpha).value;
  Cx second = (plus - Cx(2 * phi_y(xi)) + minus) / Cx(h * h);
  CHECK(abs(second - Cx(-2 / (1 - xi * xi))) < Real("1e-6"));
  // Series value matches the direct evaluation psi_y(1-(xi-it)^2).
  Real tt("0.1"), xs("0.05");
  Cx u{xs, -tt};
  Cx direct = psi_y(Cx(Real(1)) - u * u, xs);
  Cx via = y_taylor(xs, tt, a, alpha).value;
  CHECK(abs(direct - via) < Real("1e-10"));
  // Remainder constant is positive, finite, and actually dominates R.
  YTaylor probe = y_taylor(xs, tt, a, alpha);
  Cx quad = Cx(phi_y(xs)) - Cx(tt * tt / (1 - xs * xs));
  CHECK(abs(probe.value - quad) <= probe.remainder_bound * tt * tt * tt + Real("1e-30"));
  CHECK(probe.remainder_bound > 0);
}

TEST_CASE("real/imaginary split of sqrt(xi - i t)") {
  auto [a0, b0] = real_imag_root_split(Real(1), Real(0));
  CHECK(a0 == 1);
  CHECK(b0 == 0);
  auto [a1, b1] = real_imag_root_split(Real(0), Real(2));
  CHECK(fabs(a1 - 1) < Real("1e-30"));
  CHECK(fabs(b1 + 1) < Real("1e-30"));
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    Real xi = Real(std::abs(u(rng)));
    Real t = Real(u(rng));
    auto [a, b] = real_imag_root_split(xi, t);
    CHECK(fabs(a * a - b * b - xi) < Real("1e-28"));
    CHECK(fabs(-2 * a * b - t) < Real("1e-28"));
    CHECK(a >= 0);
  }
}

TEST_CASE("beta sector rule") {
  CHECK(beta_in_sector(test_pi() / 4));
  CHECK(beta_in_sector(-test_pi() / 3));
  CHECK(beta_in_sector(3 * test_pi() / 8));
  CHECK(!beta_in_sector(test_pi() / 5));
  CHECK(!beta_in_sector(Real(0)));
  // cos(2b), cos(3b), cos(4b) <= 0 across the sector.
  for (int i = 0; i <= 40; ++i) {
    Real b = test_pi() / 4 + (3 * test_pi() / 8 - test_pi() / 4) * i / 40;
    CHECK(cos(2 * b) <= Real("1e-30"));
    CHECK(cos(3 * b) <= Real("1e-30"));
    CHECK(cos(4 * b) <= Real("1e-30"));
  }
}

namespace {
// Independent oracle for the d_h coefficients: series composition of the
// defining expressions
//   branch 1: 2 xi log(1 + v^2 - sqrt(2) v sqrt(1+v^2)) - (xi+1) log(1-v^4)
//   branch 2: 2 xi log(1 - v^2 + sqrt(2) i v sqrt(1-v^2)) - (xi+1) log(1-v^4)
series::PowerSeries<Cx> psi_tilde_series(const Real& xi, std::size_t order, int branch) {
  using series::PowerSeries;
  auto var = PowerSeries<Cx>::var(order);
  auto one = PowerSeries<Cx>::one(order);
  PowerSeries<Cx> v2(order);
  if (order >= 2) v2[2] = Cx(Real(1));
  PowerSeries<Cx> v4(order);
  if (order >= 4) v4[4] = Cx(Real(1));

  PowerSeries<Cx> inner(order);  // 1 +- v^2
  PowerSeries<Cx> root_arg(order);
  for (std::size_t i = 0; i <= order; ++i) {
    inner[i] = branch == 1 ? (v2[i] + one[i]) : (one[i] - v2[i]);
    root_arg[i] = inner[i];
  }
  auto root = series::sqrt(root_arg);  // sqrt(1 +- v^2)
  auto v_root = series::mul(var, root);
  Cx coef = branch == 1 ? Cx(-sqrt(Real(2))) : Cx(Real(0), sqrt(Real(2)));
  auto arg1 = series::add(inner, series::scale(v_root, coef));
  auto log1 = series::log(arg1);

  PowerSeries<Cx> one_minus_v4(order);
  one_minus_v4[0] = Cx(Real(1));
  if (order >= 4) one_minus_v4[4] = Cx(Real(-1));
  auto log2 = series::log(one_minus_v4);

  PowerSeries<Cx> out(order);
  for (std::size_t i = 0; i <= order; ++i)
    out[i] = Cx(2 * xi) * log1[i] - Cx(xi + 1) * log2[i];
  return out;
}
}  // namespace

TEST_CASE("x-axis Taylor coefficients d_h, d'_h against series composition") {
  Real xi("0.1");
  XTaylorCoeffs c = x_taylor_coeffs(xi, -test_pi() / 4, 12);
  // Structure: b_0 = 1, b_1 = 1/2, d_4 = 1.
  CHECK(fabs(c.b[0] - 1) < Real("1e-30"));
  CHECK(fabs(c.b[1] - Real(1) / 2) < Real("1e-30"));
  CHECK(fabs(c.d[4] - 1) < Real("1e-30"));
  CHECK(fabs(c.dp[4].re - 1) < Real("1e-30"));
  CHECK(c.d[2] == 0);
  CHECK(c.d[6] == 0);
  CHECK(fabs(c.d[8] - Real(1) / 2) < Real("1e-30"));

  auto s1 = psi_tilde_series(xi, 12, 1);
  auto s2 = psi_tilde_series(xi, 12, 2);
  for (std::size_t h = 1; h <= 12; ++h) {
    CHECK(abs(s1[h] - Cx(c.d[h])) < Real("1e-6") * (abs(s1[h]) + Real("1e-3")));
    CHECK(abs(s2[h] - c.dp[h]) < Real("1e-6") * (abs(s2[h]) + Real("1e-3")));
  }
}

TEST_CASE("psi-bar reconstruction from g_m matches psi_x on the contour") {
  Real xi("0.05"), t("0.05");
  Real beta = -test_pi() / 4;
  XTaylorCoeffs c = x_taylor_coeffs(xi, beta, 48);
  // g_0 = phi and g_1 ~ 0 (saddle).
  CHECK(fabs(c.g[0] - phi_x(xi)) < Real("1e-25"));
  CHECK(fabs(c.g[1]) < Real("1e-25"));

  Cx via_series = psi_bar_from_coeffs(c, t, 1);
  Cx vpt = Cx(c.v) + Cx{cos(beta), sin(beta)} * Cx(t);
  Cx v4 = vpt * vpt * vpt * vpt;
  Cx direct = psi_x(Cx(Real(1)) - v4, xi);
  CHECK(abs(via_series - direct) < Real("1e-8"));
}

TEST_CASE("small-xi asymptotic ratios of the re-centered coefficients a_m") {
  Real xi("1e-4");
  XTaylorCoeffs c = x_taylor_coeffs(xi, -test_pi() / 3, 6);
  Real x13 = cbrt(xi), x23 = cbrt(xi * xi);
  CHECK(fabs(c.a2.re / (3 * pow(Real(2), Real(2) / 3) * x23) - 1) < Real("0.05"));
  CHECK(fabs(c.a3.re / (pow(Real(2), Real(11) / 6) * x13) - 1) < Real("0.05"));
  CHECK(fabs(c.a4.re - 1) < Real("0.05"));
  // Primed family: same leading real parts.
  CHECK(fabs(c.a2p.re / (3 * pow(Real(2), Real(2) / 3) * x23) - 1) < Real("0.05"));
  CHECK(fabs(c.a4p.re - 1) < Real("0.05"));
  // a2 equals 8 v^6 Psi''(z0) (chain rule at the saddle).
  SaddleData s = saddle_x(xi);
  Real v6 = c.v * c.v * c.v * c.v * c.v * c.v;
  CHECK(fabs(c.a2.re / (8 * v6 * s.psi2) - 1) < Real("1e-20"));
}

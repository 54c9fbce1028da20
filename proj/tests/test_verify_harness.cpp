// Grid comparison harness, oracle policy, jones ratio, prop-2.5 sweep, and
// the table emitters.
#include <doctest.h>

#include "comb/green_eval.hpp"
#include "comb/verify_harness.hpp"

#include <sstream>

using namespace comb;
using namespace comb::verify;

TEST_CASE("oracle policy picks lattice, series, contour by cost") {
  HarnessParams p;
  Oracle used;
  Real a = exact_log_prob(Axis::Y, 10, 50, p, &used);
  CHECK(used == Oracle::LatticeExact);
  Real b = exact_log_prob(Axis::Y, 10, 400, p, &used);
  CHECK(used == Oracle::SeriesExact);
  (void)b;
  Real c = exact_log_prob(Axis::Y, 10, 2500, p, &used);
  CHECK(used == Oracle::Contour);
  (void)c;
  // Forced beyond a cap is infeasible.
  p.force_oracle = Oracle::LatticeExact;
  CHECK_THROWS_AS(exact_log_prob(Axis::Y, 10, 400, p), InfeasibleError);
  (void)a;
}

TEST_CASE("lattice-exact and series-exact give identical exact logs") {
  HarnessParams p;
  p.force_oracle = Oracle::LatticeExact;
  Real a = exact_log_prob(Axis::X, 5, 40, p);
  p.force_oracle = Oracle::SeriesExact;
  Real b = exact_log_prob(Axis::X, 5, 40, p);
  CHECK(a == b);  // both are log_rational of the same exact rational
}

TEST_CASE("compare_grid: bulk y-axis errors shrink with n") {
  HarnessParams p;
  p.force_oracle = Oracle::Contour;  // fast and 1e-9-accurate, plenty here
  ErrorTable t = compare_grid(Axis::Y, {100, 200, 400}, {Real(1) / 2}, p);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0].regime == asym::Regime::Y_BULK);
  CHECK(t.rows[2].rel_error < Real("0.10"));
  CHECK(t.rows[1].rel_error < t.rows[0].rel_error);
  CHECK(t.rows[2].rel_error < t.rows[1].rel_error);
  // rel_error definition.
  for (const auto& r : t.rows)
    CHECK(fabs(r.rel_error - fabs(exp(r.estimate_log - r.exact_log) - 1)) < Real("1e-30"));
}

TEST_CASE("compare_grid: k = 0 column reproduces the local limit check") {
  HarnessParams p;
  ErrorTable t = compare_grid(Axis::X, {120}, {Real(0)}, p);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].k == 0);
  CHECK(t.rows[0].regime == asym::Regime::X_TINY);
  CHECK(t.rows[0].rel_error < Real("0.05"));
  CHECK(fabs(exp(t.rows[0].estimate_log) - asym::local_limit(2, 240)) < Real("1e-25"));
}

TEST_CASE("per-regime max error is non-increasing over a doubling n ladder") {
  HarnessParams p;
  p.force_oracle = Oracle::Contour;
  ErrorTable t = compare_grid(Axis::Y, {200, 400, 800},
                              {Real(3) / 10, Real(1) / 2, Real(7) / 10}, p);
  auto m = t.max_by_regime();
  Real prev = std::numeric_limits<Real>::infinity();
  for (std::int64_t n : {200, 400, 800}) {
    Real cur = m.at({n, asym::Regime::Y_BULK});
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("individual probabilities match their regime estimators at n = 1e4") {
  HarnessParams p;
  for (Axis axis : {Axis::Y, Axis::X}) {
    std::int64_t n = 10000, k = 32;  // the n^{-5/8} scale
    Real ex = exact_log_prob(axis, k, n, p);  // contour oracle
    Real est = asym::dispatch(axis, k, n).log_value;
    CHECK(fabs(exp(est - ex) - 1) < Real("0.20"));
  }
}

TEST_CASE("jones ratio decreases and the Einstein constants are as expected") {
  HarnessParams p;
  auto rows = jones_ratio({200, 400, 800}, Real(5) / 8, p);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].oracle.has_value());
  CHECK(rows[1].log_ratio < rows[0].log_ratio);
  CHECK(rows[2].log_ratio < rows[1].log_ratio);

  EinsteinConstants e;
  CHECK(e.spectral == Rational(3, 2));
  CHECK(e.fractal == Rational(2));
  CHECK(e.walk_expected() == Rational(8, 3));
}

TEST_CASE("jones ratio validates the exponent window") {
  CHECK_THROWS_AS(jones_ratio({100}, Real(1) / 4), ValidationError);
  CHECK_THROWS_AS(jones_ratio({100}, Real(9) / 10), ValidationError);
}

TEST_CASE("positive-coefficient inequality: no violations, strict margin off the axis") {
  Prop25Report r = prop25_check(200, 12345);
  CHECK(r.samples == 200);
  CHECK(r.violations == 0);
  CHECK(r.min_nonreal_margin > 0);
}

TEST_CASE("positive-coefficient inequality at distinguished points") {
  // Real positive z: equality.
  Cx half(Real(1) / 2);
  CHECK(fabs(abs(comb::green::eval_g(half)) - comb::green::eval_g(half).re) < Real("1e-30"));
  // Purely imaginary z: strictly below the positive-axis value.
  Cx ihalf{Real(0), Real(1) / 2};
  Real margin = comb::green::eval_g(half).re - abs(comb::green::eval_g(ihalf));
  CHECK(margin > Real("1e-3"));
}

TEST_CASE("csv and json emitters carry identical content, byte-stable") {
  HarnessParams p;
  ErrorTable t = compare_grid(Axis::Y, {60, 80}, {Real(3) / 10, Real(1) / 2}, p);
  std::ostringstream csv1, csv2, js;
  write_csv(csv1, t);
  write_csv(csv2, t);
  write_json(js, t);
  CHECK(csv1.str() == csv2.str());
  CHECK(csv1.str().substr(0, 61) ==
        "axis,n,k,xi,exact_log,estimate_log,rel_error,regime,oracle\ny,");
  // 4 rows + header.
  int lines = 0;
  for (char ch : csv1.str())
    if (ch == '\n') ++lines;
  CHECK(lines == 5);
  CHECK(js.str().find("\"regime\": \"Y_BULK\"") != std::string::npos);
  CHECK(js.str().find("\"oracle\": \"latticeExact\"") != std::string::npos);
}

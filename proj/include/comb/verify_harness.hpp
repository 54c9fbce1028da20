// Systematic comparison of the exact oracles against the asymptotic
// estimators over (xi, n) grids, the x/y anisotropy ratio demonstration,
// and the positive-coefficient triangular-inequality sweep.
#pragma once

#include "comb/asymptotic_estimators.hpp"
#include "comb/axis.hpp"
#include "comb/numeric.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

namespace comb::verify {

enum class Oracle { LatticeExact, SeriesExact, SeriesFloat, Contour };

const char* to_string(Oracle o);

struct HarnessParams {
  asym::Params asym;
  // Raw-step cap for the lattice DP (p^{(2n)} needs 2n <= cap).
  std::int64_t lattice_step_cap = 300;
  // Largest series index handled by the exact series oracle.
  std::int64_t series_exact_cap = 2000;
  // Largest n for which jones_ratio uses the contour oracle instead of the
  // regime estimators.
  std::int64_t jones_oracle_cap = 2000;
  std::optional<Oracle> force_oracle;
};

struct ErrorRow {
  Axis axis;
  std::int64_t n, k;
  Real xi;
  Real exact_log;
  Real estimate_log;
  Real rel_error;  // |exp(estimate_log - exact_log) - 1|
  asym::Regime regime;
  Oracle oracle;
};

struct ErrorTable {
  std::vector<ErrorRow> rows;
  // max rel_error per (n, regime).
  std::map<std::pair<std::int64_t, asym::Regime>, Real> max_by_regime() const;
};

// log p^{(2n)}(2k -> o) through the cheapest feasible exact/high-precision
// oracle under the configured policy.
Real exact_log_prob(Axis axis, std::int64_t k, std::int64_t n, const HarnessParams& params,
                    Oracle* used = nullptr);

ErrorTable compare_grid(Axis axis, std::vector<std::int64_t> ns, std::vector<Real> xi_grid,
                        const HarnessParams& params = {});

struct JonesRow {
  std::int64_t n, k;
  Real xi;
  Real log_ratio;  // log p_x - log p_y
  std::optional<Oracle> oracle;  // nullopt -> regime estimators
};

// xi_n = n^{-exponent} (k rounded to an integer); the log of the x/y
// probability ratio must decrease without bound when exponent is between
// 1/2 and 3/4.
std::vector<JonesRow> jones_ratio(const std::vector<std::int64_t>& ns,
                                  const Real& exponent = Real(5) / 8,
                                  const HarnessParams& params = {});

// Graph exponents of the 2-comb and the Einstein-relation prediction
// delta_w = 2 delta_f / delta_s.
struct EinsteinConstants {
  Rational spectral{3, 2};
  Rational fractal{2};
  Rational walk_expected() const { return 2 * fractal / spectral; }
};

struct Prop25Report {
  int samples = 0;
  int violations = 0;        // |f(z)| > f(|z|) beyond rounding slack
  Real min_nonreal_margin;   // min over non-real z of f(|z|) - |f(z)|
};

// |f(z)| <= f(|z|) for f in {G, F1^2, F2^2, truncated G series} at random
// z in the 0.99 disc; strict inequality expected off the positive axis.
Prop25Report prop25_check(int samples, std::uint64_t seed);

// Fixed schema: axis,n,k,xi,exact_log,estimate_log,rel_error,regime,oracle.
void write_csv(std::ostream& out, const ErrorTable& table);
void write_json(std::ostream& out, const ErrorTable& table);

void write_jones_csv(std::ostream& out, const std::vector<JonesRow>& rows);
void write_jones_json(std::ostream& out, const std::vector<JonesRow>& rows);

}  // namespace comb::verify

#include "comb/verify_harness.hpp"

#include "comb/contour_quadrature.hpp"
#include "comb/green_eval.hpp"
#include "comb/lattice_oracle.hpp"
#include "comb/saddle_core.hpp"
#include "comb/series_oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

namespace comb::verify {

const char* to_string(Oracle o) {
  switch (o) {
    case Oracle::LatticeExact: return "latticeExact";
    case Oracle::SeriesExact: return "seriesExact";
    case Oracle::SeriesFloat: return "seriesFloat";
    case Oracle::Contour: return "contour";
  }
  return "?";
}

namespace {

lattice::CombVertex axis_vertex(Axis axis, std::int64_t k) {
  return axis == Axis::Y ? lattice::CombVertex{0, 2 * k} : lattice::CombVertex{2 * k, 0};
}

Real contour_log_prob(Axis axis, std::int64_t k, std::int64_t n) {
  // The trapezoid sum with M = 4n nodes aliases coefficients n + jM with
  // weight r^{jM}; cap the radius at 1 - 9/n so that r^{4n} <= e^{-36}
  // even when the saddle sits very close to 1 (small xi).
  Real radius = 1 - Real(9) / Real(n);
  if (radius < Real(1) / 2) radius = Real(1) / 2;
  if (k > 0) {
    Real xi = Real(k) / Real(n);
    Real z0 = axis == Axis::Y ? saddle::saddle_y(xi).z0 : saddle::saddle_x(xi).z0;
    if (z0 < radius) radius = z0;
  }
  return log(contour::cauchy_circle(axis, k, n, radius));
}

Real series_float_log_prob(Axis axis, std::int64_t k, std::int64_t n) {
  auto s = axis == Axis::Y
               ? series::prob_series_y_f(static_cast<unsigned long>(k), static_cast<std::size_t>(n))
               : series::prob_series_x_f(static_cast<unsigned long>(k), static_cast<std::size_t>(n));
  Real v = s[static_cast<std::size_t>(n)];
  if (!(v > 0)) throw ToleranceError("series-float oracle produced a non-positive value");
  return log(v);
}

}  // namespace

Real exact_log_prob(Axis axis, std::int64_t k, std::int64_t n, const HarnessParams& params,
                    Oracle* used) {
  if (n <= 0 || k < 0) throw ValidationError("exact_log_prob: need n > 0, k >= 0");
  Oracle pick;
  if (params.force_oracle) {
    pick = *params.force_oracle;
    if (pick == Oracle::LatticeExact && 2 * n > params.lattice_step_cap)
      throw InfeasibleError("lattice oracle forced beyond its step cap");
    if (pick == Oracle::SeriesExact && n > params.series_exact_cap)
      throw InfeasibleError("exact series oracle forced beyond its order cap");
  } else if (2 * n <= params.lattice_step_cap) {
    pick = Oracle::LatticeExact;
  } else if (n <= params.series_exact_cap) {
    pick = Oracle::SeriesExact;
  } else {
    pick = Oracle::Contour;
  }
  if (used) *used = pick;
  switch (pick) {
    case Oracle::LatticeExact: {
      Rational p = lattice::exact_prob(axis_vertex(axis, k), lattice::kOrigin,
                                       static_cast<std::uint64_t>(2 * n),
                                       static_cast<std::uint64_t>(params.lattice_step_cap));
      return log_rational(p);
    }
    case Oracle::SeriesExact: {
      auto s = axis == Axis::Y ? series::prob_series_y(static_cast<unsigned long>(k),
                                                       static_cast<std::size_t>(n))
                               : series::prob_series_x(static_cast<unsigned long>(k),
                                                       static_cast<std::size_t>(n));
      return log_rational(s[static_cast<std::size_t>(n)]);
    }
    case Oracle::SeriesFloat:
      return series_float_log_prob(axis, k, n);
    case Oracle::Contour:
      return contour_log_prob(axis, k, n);
  }
  throw ValidationError("unreachable oracle");
}

std::map<std::pair<std::int64_t, asym::Regime>, Real> ErrorTable::max_by_regime() const {
  std::map<std::pair<std::int64_t, asym::Regime>, Real> m;
  for (const auto& r : rows) {
    auto key = std::make_pair(r.n, r.regime);
    auto it = m.find(key);
    if (it == m.end() || it->second < r.rel_error) m[key] = r.rel_error;
  }
  return m;
}

ErrorTable compare_grid(Axis axis, std::vector<std::int64_t> ns, std::vector<Real> xi_grid,
                        const HarnessParams& params) {
  if (ns.empty() || xi_grid.empty())
    throw ValidationError("compare_grid: grids must be non-empty");
  std::sort(ns.begin(), ns.end());
  std::sort(xi_grid.begin(), xi_grid.end());
  ErrorTable table;
  for (std::int64_t n : ns) {
    for (const Real& xi_req : xi_grid) {
      std::int64_t k = static_cast<std::int64_t>(
          llround(static_cast<double>(xi_req * Real(n))));
      if (k < 0) k = 0;
      ErrorRow row;
      row.axis = axis;
      row.n = n;
      row.k = k;
      row.xi = Real(k) / Real(n);
      asym::EstimateResult est = asym::dispatch(axis, k, n, params.asym);
      row.estimate_log = est.log_value;
      row.regime = est.regime;
      row.exact_log = exact_log_prob(axis, k, n, params, &row.oracle);
      row.rel_error = fabs(exp(row.estimate_log - row.exact_log) - 1);
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

std::vector<JonesRow> jones_ratio(const std::vector<std::int64_t>& ns, const Real& exponent,
                                  const HarnessParams& params) {
  if (!(exponent > Real(1) / 2 && exponent < Real(3) / 4))
    throw ValidationError("jones_ratio: exponent must lie in (1/2, 3/4)");
  std::vector<JonesRow> rows;
  for (std::int64_t n : ns) {
    JonesRow r;
    r.n = n;
    Real kf = exp((1 - exponent) * log(Real(n)));
    r.k = std::max<std::int64_t>(1, static_cast<std::int64_t>(llround(static_cast<double>(kf))));
    r.xi = Real(r.k) / Real(n);
    if (n <= params.jones_oracle_cap) {
      Real lx = contour_log_prob(Axis::X, r.k, n);
      Real ly = contour_log_prob(Axis::Y, r.k, n);
      r.log_ratio = lx - ly;
      r.oracle = Oracle::Contour;
    } else {
      r.log_ratio = asym::dispatch(Axis::X, r.k, n, params.asym).log_value -
                    asym::dispatch(Axis::Y, r.k, n, params.asym).log_value;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

Prop25Report prop25_check(int samples, std::uint64_t seed) {
  Prop25Report rep;
  rep.samples = samples;
  rep.min_nonreal_margin = std::numeric_limits<Real>::infinity();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto g_series = series::green_series_origin_f(200);
  // Rounding slack for the violation count.
  Real slack = ldexp(Real(1), -static_cast<int>(precision_bits()) / 2);
  for (int i = 0; i < samples; ++i) {
    double r = 0.99 * std::sqrt(unif(rng));
    double th = 2 * 3.14159265358979323846 * unif(rng);
    Cx z{Real(r * std::cos(th)), Real(r * std::sin(th))};
    Real az = abs(z);
    bool nonreal = !(z.im == 0 && z.re >= 0);
    auto probe = [&](const Cx& val_z, const Real& val_abs) {
      Real margin = val_abs - abs(val_z);
      if (margin < -slack) ++rep.violations;
      if (nonreal && margin < rep.min_nonreal_margin) rep.min_nonreal_margin = margin;
    };
    probe(green::eval_g(z), green::eval_g(Cx(az)).re);
    probe(green::eval_f1_sq(z), green::eval_f1_sq(Cx(az)).re);
    probe(green::eval_f2_sq(z), green::eval_f2_sq(Cx(az)).re);
    probe(series::eval_series(g_series, z), series::eval_series(g_series, az));
  }
  return rep;
}

namespace {
double as_double(const Real& x) { return static_cast<double>(x); }
}  // namespace

void write_csv(std::ostream& out, const ErrorTable& table) {
  out << "axis,n,k,xi,exact_log,estimate_log,rel_error,regime,oracle\n";
  for (const auto& r : table.rows) {
    out << comb::to_string(r.axis) << ',' << r.n << ',' << r.k << ',' << format_real(r.xi) << ','
        << format_real(r.exact_log) << ',' << format_real(r.estimate_log) << ','
        << format_real(r.rel_error) << ',' << asym::to_string(r.regime) << ','
        << to_string(r.oracle) << '\n';
  }
}

void write_json(std::ostream& out, const ErrorTable& table) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : table.rows) {
    arr.push_back({{"axis", comb::to_string(r.axis)},
                   {"n", r.n},
                   {"k", r.k},
                   {"xi", as_double(r.xi)},
                   {"exact_log", as_double(r.exact_log)},
                   {"estimate_log", as_double(r.estimate_log)},
                   {"rel_error", as_double(r.rel_error)},
                   {"regime", asym::to_string(r.regime)},
                   {"oracle", to_string(r.oracle)}});
  }
  out << arr.dump(2) << '\n';
}

void write_jones_csv(std::ostream& out, const std::vector<JonesRow>& rows) {
  out << "n,k,xi,log_ratio,method\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.k << ',' << format_real(r.xi) << ',' << format_real(r.log_ratio) << ','
        << (r.oracle ? to_string(*r.oracle) : "estimator") << '\n';
  }
}

void write_jones_json(std::ostream& out, const std::vector<JonesRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"k", r.k},
                   {"xi", as_double(r.xi)},
                   {"log_ratio", as_double(r.log_ratio)},
                   {"method", r.oracle ? to_string(*r.oracle) : "estimator"}});
  }
  out << arr.dump(2) << '\n';
}

}  // namespace comb::verify

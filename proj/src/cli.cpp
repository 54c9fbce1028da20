#include "comb/cli.hpp"

#include "comb/asymptotic_estimators.hpp"
#include "comb/contour_quadrature.hpp"
#include "comb/green_eval.hpp"
#include "comb/lattice_oracle.hpp"
#include "comb/saddle_core.hpp"
#include "comb/series_oracle.hpp"
#include "comb/verify_harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace comb::cli {

namespace {

struct GlobalConfig {
  unsigned prec_bits = 113;
  double a = 0.05;
  double c = 0.05;
  double alpha = 0.25;
  double epsilon = 0.05;
  double eps0 = 0;  // 0 -> alpha^4/2
  double quad_tol = 1e-12;
  double kappa_crossover = 0;  // 0 -> built-in default
  std::int64_t exact_cap = 300;
  std::int64_t series_cap = 2000;
  std::string format = "csv";
  std::string out_path;

  void validate() const {
    if (a <= 0 || a > 0.5) throw ValidationError("--a must lie in (0, 0.5]");
    if (alpha <= 0 || alpha > 0.25) throw ValidationError("--alpha must lie in (0, 0.25]");
    if (c <= 0 || c >= 1) throw ValidationError("--c must lie in (0, 1)");
    if (epsilon <= 0 || epsilon >= 0.25) throw ValidationError("--epsilon must lie in (0, 0.25)");
    if (format != "csv" && format != "json") throw ValidationError("--format must be csv or json");
  }

  asym::Params asym_params() const {
    asym::Params p;
    p.a = Real(a);
    p.c = Real(c);
    p.alpha = Real(alpha);
    p.epsilon = Real(epsilon);
    p.quad_tol = Real(quad_tol);
    p.kappa_crossover = Real(kappa_crossover);
    return p;
  }

  verify::HarnessParams harness_params() const {
    verify::HarnessParams h;
    h.asym = asym_params();
    h.lattice_step_cap = exact_cap;
    h.series_exact_cap = series_cap;
    return h;
  }
};

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  if (out.empty()) throw ValidationError("empty integer list");
  return out;
}

std::vector<Real> parse_real_list(const std::string& s) {
  std::vector<Real> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(Real(item));
  }
  if (out.empty()) throw ValidationError("empty real list");
  return out;
}

// Writes either to `out` or to cfg.out_path.
void emit(const GlobalConfig& cfg, std::ostream& out, const std::string& payload) {
  if (cfg.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw ValidationError("cannot open output file: " + cfg.out_path);
  f << payload;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  GlobalConfig cfg;
  CLI::App app{"uniform space-time asymptotics of the simple random walk on the 2-comb"};
  app.set_config("--config", "", "flat key=value config file (flags win)");
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand name

  app.add_option("--prec-bits", cfg.prec_bits, "working mantissa bits")->capture_default_str();
  app.add_option("--a", cfg.a, "bulk/small regime split")->capture_default_str();
  app.add_option("--c", cfg.c, "upper cutoff 1-c")->capture_default_str();
  app.add_option("--alpha", cfg.alpha, "contour segment half-length")->capture_default_str();
  app.add_option("--epsilon", cfg.epsilon, "boundary exponent tweak")->capture_default_str();
  app.add_option("--eps0", cfg.eps0, "closing-arc clearance (0 = alpha^4/2)")
      ->capture_default_str();
  app.add_option("--quad-tol", cfg.quad_tol, "quadrature tolerance")->capture_default_str();
  app.add_option("--kappa-crossover", cfg.kappa_crossover, "crossover indicator constant (0 = default)")
      ->capture_default_str();
  app.add_option("--exact-cap", cfg.exact_cap, "lattice oracle step cap")->capture_default_str();
  app.add_option("--series-cap", cfg.series_cap, "exact series order cap")->capture_default_str();
  app.add_option("--format", cfg.format, "csv or json")->capture_default_str();
  app.add_option("--out", cfg.out_path, "write table output to a file");

  std::string axis_s = "y";
  std::int64_t k = 0, n = 1;
  std::string n_list = "100";
  std::string xi_list = "0.5";
  bool use_float = false;
  double xi_d = 0.5, z_re = 0, z_im = 0;
  int dim = 2;
  std::string kind_s = "circle";
  double exponent = 0.625;

  auto* c_exact = app.add_subcommand("exact", "exact p^{(2n)}(2k -> o) as a rational");
  c_exact->add_option("k", k)->required();
  c_exact->add_option("n", n)->required();
  c_exact->add_option("--axis", axis_s);

  auto* c_series = app.add_subcommand("series", "dump generating-series coefficients 0..N");
  c_series->add_option("k", k)->required();
  c_series->add_option("n", n)->required();
  c_series->add_option("--axis", axis_s);
  c_series->add_flag("--float", use_float, "extended-precision float mode");

  auto* c_green = app.add_subcommand("green", "evaluate the d-comb Green function");
  c_green->add_option("--re", z_re)->required();
  c_green->add_option("--im", z_im);
  c_green->add_option("--d", dim);

  auto* c_saddle = app.add_subcommand("saddle", "saddle data at xi");
  c_saddle->add_option("xi", xi_d)->required();
  c_saddle->add_option("--axis", axis_s);

  auto* c_asym = app.add_subcommand("asym", "asymptotic estimate of p^{(2n)}(2k -> o)");
  c_asym->add_option("k", k)->required();
  c_asym->add_option("n", n)->required();
  c_asym->add_option("--axis", axis_s);

  auto* c_contour = app.add_subcommand("contour", "contour split integral (A)+(B)");
  c_contour->add_option("--kind", kind_s, "circle|hybrid|quarter|twobeta");
  c_contour->add_option("--xi", xi_d);
  c_contour->add_option("--k", k);
  c_contour->add_option("--n", n);
  c_contour->add_option("--axis", axis_s);

  auto* c_compare = app.add_subcommand("compare", "oracle-vs-estimate error table");
  c_compare->add_option("--axis", axis_s);
  c_compare->add_option("--n", n_list, "comma-separated n values");
  c_compare->add_option("--xi", xi_list, "comma-separated xi values");

  auto* c_jones = app.add_subcommand("jones", "x/y log-ratio table at xi_n = n^{-exponent}");
  c_jones->add_option("--n", n_list, "comma-separated n values");
  c_jones->add_option("--exponent", exponent);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::stringstream tmp;
    int rc = app.exit(e, out, tmp);
    err << tmp.str();
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.validate();
    if (k < 0 || n < 0) throw ValidationError("k and n must be non-negative");
    set_precision_bits(cfg.prec_bits);
    Axis axis = parse_axis(axis_s);
    std::ostringstream payload;

    if (c_exact->parsed()) {
      lattice::CombVertex start =
          axis == Axis::Y ? lattice::CombVertex{0, 2 * k} : lattice::CombVertex{2 * k, 0};
      Rational p = lattice::exact_prob(start, lattice::kOrigin,
                                       static_cast<std::uint64_t>(2 * n),
                                       static_cast<std::uint64_t>(cfg.exact_cap));
      payload << p << '\n';
      payload << "log " << format_real(log_rational(p)) << '\n';
    } else if (c_series->parsed()) {
      if (use_float) {
        auto s = axis == Axis::Y ? series::prob_series_y_f(k, n) : series::prob_series_x_f(k, n);
        for (std::size_t i = 0; i < s.c.size(); ++i)
          payload << i << ' ' << format_real(s.c[i]) << '\n';
      } else {
        auto s = axis == Axis::Y ? series::prob_series_y(k, n) : series::prob_series_x(k, n);
        for (std::size_t i = 0; i < s.c.size(); ++i) payload << i << ' ' << s.c[i] << '\n';
      }
    } else if (c_green->parsed()) {
      Cx g = green::eval_gd(dim, Cx{Real(z_re), Real(z_im)});
      payload << format_real(g.re) << ' ' << format_real(g.im) << '\n';
    } else if (c_saddle->parsed()) {
      saddle::SaddleData s =
          axis == Axis::Y ? saddle::saddle_y(Real(xi_d)) : saddle::saddle_x(Real(xi_d));
      payload << "z0 " << format_real(s.z0) << '\n';
      payload << "u0 " << format_real(s.u0) << '\n';
      payload << "phi " << format_real(s.phi) << '\n';
      payload << "psi2 " << format_real(s.psi2) << '\n';
      payload << "psi3 " << format_real(s.psi3) << '\n';
      payload << "residual " << format_real(saddle::saddle_residual(axis, Real(xi_d))) << '\n';
    } else if (c_asym->parsed()) {
      asym::EstimateResult e = asym::dispatch(axis, k, n, cfg.asym_params());
      payload << "regime " << asym::to_string(e.regime) << '\n';
      payload << "formula " << e.formula << '\n';
      payload << "log_value " << format_real(e.log_value) << '\n';
      payload << "value " << format_real(e.value) << '\n';
      if (e.alternate) {
        payload << "alt_regime " << asym::to_string(e.alternate->first) << '\n';
        payload << "alt_log_value " << format_real(e.alternate->second) << '\n';
      }
    } else if (c_contour->parsed()) {
      contour::ContourParams cp;
      cp.alpha = Real(cfg.alpha);
      cp.eps0 = Real(cfg.eps0);
      contour::ContourSpec spec =
          contour::build_contour(contour::parse_contour_kind(kind_s), axis, Real(xi_d), cp);
      contour::QuadOptions opt;
      opt.rel_tol = Real(cfg.quad_tol);
      contour::SplitResult r = contour::split_integral(spec, k, n, opt);
      payload << "part_a " << format_real(r.part_a.re) << ' ' << format_real(r.part_a.im) << '\n';
      payload << "part_b " << format_real(r.part_b.re) << ' ' << format_real(r.part_b.im) << '\n';
      payload << "total " << format_real(r.total) << '\n';
    } else if (c_compare->parsed()) {
      verify::ErrorTable t = verify::compare_grid(axis, parse_int_list(n_list),
                                                  parse_real_list(xi_list), cfg.harness_params());
      std::ostringstream body;
      if (cfg.format == "csv")
        verify::write_csv(body, t);
      else
        verify::write_json(body, t);
      payload << body.str();
    } else if (c_jones->parsed()) {
      auto rows = verify::jones_ratio(parse_int_list(n_list), Real(exponent),
                                      cfg.harness_params());
      std::ostringstream body;
      if (cfg.format == "csv")
        verify::write_jones_csv(body, rows);
      else
        verify::write_jones_json(body, rows);
      payload << body.str();
    }

    emit(cfg, out, payload.str());
    return 0;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return 2;
  } catch (const InfeasibleError& e) {
    err << "infeasible request: " << e.what() << '\n';
    return 3;
  } catch (const ToleranceError& e) {
    err << "tolerance failure: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  }
}

}  // namespace comb::cli

#include "comb/contour_quadrature.hpp"

#include "comb/green_eval.hpp"
#include "comb/saddle_core.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <functional>

namespace comb::contour {

namespace {

using boost::math::constants::pi;
using green::CutPolicy;

const Real& pi_r() {
  static thread_local Real v;
  static thread_local unsigned bits = 0;
  if (bits != precision_bits()) {
    v = pi<Real>();
    bits = precision_bits();
  }
  return v;
}

struct Piece {
  // z(t) and dz/dt on [lo, hi].
  std::function<Cx(const Real&)> z;
  std::function<Cx(const Real&)> dz;
  Real lo, hi;
};

Cx quartic_point(const Real& v, const Cx& dir, const Real& t) {
  Cx p = Cx(v) + dir * Cx(t);
  Cx p2 = p * p;
  return Cx(Real(1)) - p2 * p2;
}

Cx quartic_deriv(const Real& v, const Cx& dir, const Real& t) {
  Cx p = Cx(v) + dir * Cx(t);
  return Real(-4) * dir * p * p * p;
}

Cx unit(const Real& angle) { return {cos(angle), sin(angle)}; }

}  // namespace

const char* to_string(ContourKind k) {
  switch (k) {
    case ContourKind::SaddleCircle: return "saddle-circle";
    case ContourKind::UPlaneHybrid: return "u-hybrid";
    case ContourKind::VPlaneQuarter: return "v-quarter";
    case ContourKind::VPlaneTwoBeta: return "v-twobeta";
  }
  return "?";
}

ContourKind parse_contour_kind(const std::string& s) {
  if (s == "saddle-circle" || s == "circle") return ContourKind::SaddleCircle;
  if (s == "u-hybrid" || s == "hybrid") return ContourKind::UPlaneHybrid;
  if (s == "v-quarter" || s == "quarter") return ContourKind::VPlaneQuarter;
  if (s == "v-twobeta" || s == "twobeta") return ContourKind::VPlaneTwoBeta;
  throw ValidationError("unknown contour kind: " + s);
}

ContourSpec build_contour(ContourKind kind, Axis axis, const Real& xi,
                          const ContourParams& params) {
  if (!(xi > 0 && xi < 1)) throw ValidationError("build_contour: xi must be in (0,1)");
  ContourSpec s;
  s.kind = kind;
  s.axis = axis;
  s.xi = xi;
  s.alpha = params.alpha;
  s.t0 = 0;
  Real eps0 = params.eps0;
  if (eps0 == 0) eps0 = params.alpha * params.alpha * params.alpha * params.alpha / 2;

  auto arc_from_endpoint = [&](const Cx& end) {
    s.arc_radius = abs(end);
    s.arc_start = arg(end);
    if (s.arc_radius < 1 + eps0)
      throw ValidationError("build_contour: closing arc too close to the singularity "
                            "(|z(alpha)| < 1 + eps0)");
    if (!(s.arc_start > 0))
      throw ValidationError("build_contour: segment endpoint not in the upper half plane");
  };

  switch (kind) {
    case ContourKind::SaddleCircle: {
      saddle::SaddleData sd = axis == Axis::Y ? saddle::saddle_y(xi) : saddle::saddle_x(xi);
      s.arc_radius = sd.z0;
      s.arc_start = s.alpha;
      break;
    }
    case ContourKind::UPlaneHybrid: {
      if (axis != Axis::Y) throw ValidationError("UPlaneHybrid is a y-axis contour");
      Cx end = Cx(Real(1)) - (Cx(xi) - Cx(Real(0), s.alpha)) * (Cx(xi) - Cx(Real(0), s.alpha));
      arc_from_endpoint(end);
      break;
    }
    case ContourKind::VPlaneQuarter: {
      if (axis != Axis::X) throw ValidationError("VPlaneQuarter is an x-axis contour");
      Real v = sqrt(saddle::u0_x(xi));
      // The rotated leg clears the unit circle only once t dominates v(xi);
      // scale the segment with v so the closing arc stays admissible.
      if (s.alpha < 2 * v) s.alpha = 2 * v;
      // The e^{-i pi/4} leg maps into the upper half z-plane (arg v-point in
      // [-pi/4, 0] quadruples into [-pi, 0]).
      Cx end = quartic_point(v, unit(-pi_r() / 4), s.alpha);
      arc_from_endpoint(end);
      break;
    }
    case ContourKind::VPlaneTwoBeta: {
      if (axis != Axis::X) throw ValidationError("VPlaneTwoBeta is an x-axis contour");
      Real v = sqrt(saddle::u0_x(xi));
      s.t0 = 2 * v / (sqrt(Real(3)) - 1);
      // The outer beta = +pi/3 leg must exist: grow alpha when the switch
      // point falls beyond the configured segment length.
      if (s.alpha <= s.t0 * Real(1.2)) s.alpha = s.t0 * Real(1.2);
      Cx end = quartic_point(v, unit(pi_r() / 3), s.alpha);
      arc_from_endpoint(end);
      break;
    }
  }

  // Sampled polyline for winding/orientation checks.
  int m = params.samples;
  if (m < 16) m = 16;
  auto push_param_range = [&](auto&& zfun, const Real& lo, const Real& hi, int steps) {
    for (int i = 0; i < steps; ++i) {
      Real t = lo + (hi - lo) * i / steps;
      s.points.push_back(zfun(t));
    }
  };
  switch (kind) {
    case ContourKind::SaddleCircle:
      push_param_range([&](const Real& t) { return s.arc_radius * unit(t); }, -pi_r(), pi_r(), m);
      break;
    case ContourKind::UPlaneHybrid: {
      push_param_range(
          [&](const Real& t) {
            Cx u = Cx(xi) - Cx(Real(0), t);
            return Cx(Real(1)) - u * u;
          },
          -s.alpha, s.alpha, m / 2);
      push_param_range([&](const Real& t) { return s.arc_radius * unit(t); }, s.arc_start,
                       2 * pi_r() - s.arc_start, m / 2);
      break;
    }
    case ContourKind::VPlaneQuarter: {
      Real v = sqrt(saddle::u0_x(xi));
      push_param_range(
          [&](const Real& t) {
            if (t < 0) return conj(quartic_point(v, unit(-pi_r() / 4), -t));
            return quartic_point(v, unit(-pi_r() / 4), t);
          },
          -s.alpha, s.alpha, m / 2);
      // The e^{-i pi/4} leg maps into the lower half plane; traversing t
      // upward runs lower -> z0 -> upper, so the conjugate leg comes first.
      push_param_range([&](const Real& t) { return s.arc_radius * unit(t); }, s.arc_start,
                       2 * pi_r() - s.arc_start, m / 2);
      break;
    }
    case ContourKind::VPlaneTwoBeta: {
      Real v = sqrt(saddle::u0_x(xi));
      push_param_range(
          [&](const Real& t) {
            Real at = fabs(t);
            Cx p = at <= s.t0 ? quartic_point(v, unit(-pi_r() / 3), at)
                              : quartic_point(v, unit(pi_r() / 3), at);
            return t < 0 ? conj(p) : p;
          },
          -s.alpha, s.alpha, m / 2);
      push_param_range([&](const Real& t) { return s.arc_radius * unit(t); }, s.arc_start,
                       2 * pi_r() - s.arc_start, m / 2);
      break;
    }
  }
  return s;
}

long winding_number(const std::vector<Cx>& loop) {
  if (loop.size() < 3) return 0;
  Real total = 0;
  Real prev = arg(loop.front());
  for (std::size_t i = 1; i <= loop.size(); ++i) {
    Real cur = arg(loop[i % loop.size()]);
    Real d = cur - prev;
    if (d > pi_r()) d -= 2 * pi_r();
    if (d < -pi_r()) d += 2 * pi_r();
    total += d;
    prev = cur;
  }
  Real w = total / (2 * pi_r());
  return static_cast<long>(llround(static_cast<double>(w)));
}

namespace {
// log(G F^{2k}) without the z power.
Cx log_w(Axis axis, std::int64_t k, const Cx& z) {
  Cx acc = log(green::eval_g(z, CutPolicy::UpperContinuation));
  if (k != 0) {
    Cx lf = axis == Axis::Y ? log(green::eval_f1_sq(z, CutPolicy::UpperContinuation))
                            : log(green::eval_f2_sq(z, CutPolicy::UpperContinuation));
    acc += Real(k) * lf;
  }
  return acc;
}
}  // namespace

Cx log_integrand(Axis axis, std::int64_t k, std::int64_t n, const Cx& z) {
  return log_w(axis, k, z) - Real(n + 1) * log(z);
}

Real cauchy_circle(Axis axis, std::int64_t k, std::int64_t n, const Real& radius,
                   std::int64_t nodes) {
  if (!(radius > 0 && radius < 1))
    throw ValidationError("cauchy_circle: radius must lie in (0, 1)");
  if (n < 0 || k < 0) throw ValidationError("cauchy_circle: n, k must be non-negative");
  std::int64_t M = nodes > 0 ? nodes : (n >= 16 ? 4 * n : 64);
  Real n_log_r = Real(n) * log(radius);
  Cx sum(Real(0));
  for (std::int64_t j = 0; j < M; ++j) {
    Real theta = 2 * pi_r() * j / M;
    Cx z = radius * unit(theta);
    // a_n = (1/M) sum_j W(z_j) r^{-n} e^{-i n theta_j} up to aliasing; the
    // rotation phase n*j mod M is reduced in exact integer arithmetic.
    Real phase = -2 * pi_r() * Real((n % M) * j % M) / M;
    sum += exp(log_w(axis, k, z) + Cx(-n_log_r, phase));
  }
  Cx avg = sum / Real(M);
  Real tol = ldexp(Real(1), -static_cast<int>(precision_bits()) / 2);
  if (!(fabs(avg.im) <= tol * fabs(avg.re)))
    throw ToleranceError("cauchy_circle: residual imaginary part too large "
                         "(insufficient nodes or precision for this radius)");
  return avg.re;
}

Real cauchy_circle_checked(Axis axis, std::int64_t k, std::int64_t n, const Real& radius,
                           std::int64_t nodes, const Real& rel_tol) {
  std::int64_t M = nodes > 0 ? nodes : (n >= 16 ? 4 * n : 64);
  Real coarse = cauchy_circle(axis, k, n, radius, M);
  Real fine = cauchy_circle(axis, k, n, radius, 2 * M);
  if (!(fabs(coarse - fine) <= rel_tol * fabs(fine)))
    throw ToleranceError("cauchy_circle_checked: insufficient nodes at M = " +
                         std::to_string(M));
  return fine;
}

namespace {

// Adaptive Gauss-Legendre integration of f over [lo, hi], doubling the
// panel count until the result is stable.
Cx integrate_adaptive(const std::function<Cx(const Real&)>& f, const Real& lo, const Real& hi,
                      const QuadOptions& opt, const Real& abs_floor) {
  using GL = boost::math::quadrature::gauss<Real, 30>;
  const auto& xs = GL::abscissa();  // non-negative half
  const auto& ws = GL::weights();
  auto integrate_with = [&](int panels) {
    Cx acc(Real(0));
    Real h = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
      Real mid = lo + h * p + h / 2;
      Real half = h / 2;
      for (std::size_t j = 0; j < xs.size(); ++j) {
        Real dx = half * xs[j];
        if (xs[j] == 0) {
          acc += Cx(ws[j] * half) * f(mid);
        } else {
          acc += Cx(ws[j] * half) * (f(mid + dx) + f(mid - dx));
        }
      }
    }
    return acc;
  };
  int panels = opt.initial_panels;
  Cx prev = integrate_with(panels);
  for (int d = 0; d < opt.max_doublings; ++d) {
    panels *= 2;
    Cx cur = integrate_with(panels);
    Real diff = abs(cur - prev);
    if (diff <= opt.rel_tol * abs(cur) + abs_floor) return cur;
    prev = cur;
  }
  throw ToleranceError("contour quadrature did not stabilize under panel doubling");
}

}  // namespace

SplitResult split_integral(const ContourSpec& spec, std::int64_t k, std::int64_t n,
                           const QuadOptions& options) {
  const Real two_pi = 2 * pi_r();
  auto integrand = [&](const Cx& z, const Cx& dz) {
    return exp(log_integrand(spec.axis, k, n, z)) * dz / Cx(Real(0), two_pi);
  };

  // Scale floor: the answer is of size e^{n phi}; converge pieces to
  // rel_tol relative to that scale.
  Real phi = spec.axis == Axis::Y ? saddle::saddle_y(spec.xi).phi : saddle::saddle_x(spec.xi).phi;
  Real abs_floor = options.rel_tol * exp(Real(n) * phi) / 1024;

  std::vector<Piece> near_pieces;
  switch (spec.kind) {
    case ContourKind::SaddleCircle: {
      Real r = spec.arc_radius;
      near_pieces.push_back(
          {[r](const Real& t) { return r * unit(t); },
           [r](const Real& t) { return Cx(Real(0), r) * unit(t); }, -spec.alpha, spec.alpha});
      break;
    }
    case ContourKind::UPlaneHybrid: {
      Real xi = spec.xi;
      near_pieces.push_back({[xi](const Real& t) {
                               Cx u = Cx(xi) - Cx(Real(0), t);
                               return Cx(Real(1)) - u * u;
                             },
                             [xi](const Real& t) {
                               Cx u = Cx(xi) - Cx(Real(0), t);
                               return Cx(Real(0), 2) * u;  // d/dt [1-u^2], du/dt = -i
                             },
                             -spec.alpha, spec.alpha});
      break;
    }
    case ContourKind::VPlaneQuarter: {
      Real v = sqrt(saddle::u0_x(spec.xi));
      Cx dmin = unit(-pi_r() / 4), dpl = unit(pi_r() / 4);
      // Lower (conjugate) branch from -alpha to 0, then the main branch.
      near_pieces.push_back({[v, dpl](const Real& t) { return quartic_point(v, dpl, -t); },
                             [v, dpl](const Real& t) { return -quartic_deriv(v, dpl, -t); },
                             -spec.alpha, Real(0)});
      near_pieces.push_back({[v, dmin](const Real& t) { return quartic_point(v, dmin, t); },
                             [v, dmin](const Real& t) { return quartic_deriv(v, dmin, t); },
                             Real(0), spec.alpha});
      break;
    }
    case ContourKind::VPlaneTwoBeta: {
      Real v = sqrt(saddle::u0_x(spec.xi));
      Cx dm3 = unit(-pi_r() / 3), dp3 = unit(pi_r() / 3);
      Real t0 = spec.t0;
      // Four legs, ordered by increasing parameter (lower half first).  The
      // lower legs are the conjugates of the upper ones, and conjugating the
      // e^{-i pi/3} ray gives the e^{+i pi/3} ray.
      near_pieces.push_back({[v, dm3](const Real& t) { return quartic_point(v, dm3, -t); },
                             [v, dm3](const Real& t) { return -quartic_deriv(v, dm3, -t); },
                             -spec.alpha, -t0});
      near_pieces.push_back({[v, dp3](const Real& t) { return quartic_point(v, dp3, -t); },
                             [v, dp3](const Real& t) { return -quartic_deriv(v, dp3, -t); },
                             -t0, Real(0)});
      near_pieces.push_back({[v, dm3](const Real& t) { return quartic_point(v, dm3, t); },
                             [v, dm3](const Real& t) { return quartic_deriv(v, dm3, t); },
                             Real(0), t0});
      near_pieces.push_back({[v, dp3](const Real& t) { return quartic_point(v, dp3, t); },
                             [v, dp3](const Real& t) { return quartic_deriv(v, dp3, t); },
                             t0, spec.alpha});
      break;
    }
  }

  SplitResult out;
  out.part_a = Cx(Real(0));
  for (const auto& p : near_pieces) {
    out.part_a += integrate_adaptive([&](const Real& t) { return integrand(p.z(t), p.dz(t)); },
                                     p.lo, p.hi, options, abs_floor);
  }

  // Closing arc (the rest of the circle for SaddleCircle).  The arc is
  // integrated to genuine relative accuracy (its own scale, not the
  // total's), so the reported (B) piece is meaningful even when it is many
  // orders below (A); the e^{-ins} oscillation needs the panels to resolve
  // ~n cycles first.
  Real lo = spec.kind == ContourKind::SaddleCircle ? spec.alpha : spec.arc_start;
  Real hi = two_pi - lo;
  Real r = spec.arc_radius;
  QuadOptions arc_opt = options;
  arc_opt.initial_panels = std::max<int>(options.initial_panels,
                                         static_cast<int>(n / 24) + 1);
  arc_opt.max_doublings = options.max_doublings + 4;
  out.part_b = integrate_adaptive(
      [&](const Real& s) {
        Cx z = r * unit(s);
        return integrand(z, Cx(Real(0), r) * unit(s));
      },
      lo, hi, arc_opt, abs_floor * options.rel_tol);

  Cx tot = out.part_a + out.part_b;
  Real tol = ldexp(Real(1), -static_cast<int>(precision_bits()) / 2);
  if (!(fabs(tot.im) <= tol * (fabs(tot.re) + abs_floor)))
    throw ToleranceError("split_integral: residual imaginary part too large");
  out.total = tot.re;
  return out;
}

}  // namespace comb::contour

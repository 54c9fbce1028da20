#include "comb/saddle_core.hpp"

#include "comb/green_eval.hpp"

#include <boost/math/constants/constants.hpp>

namespace comb::saddle {

using green::principal_sqrt;

namespace {
const Real& sqrt2() {
  static thread_local Real v;
  static thread_local unsigned bits = 0;
  if (bits != precision_bits()) {
    v = sqrt(Real(2));
    bits = precision_bits();
  }
  return v;
}

void check_xi_open_unit(const Real& xi) {
  if (!(xi > 0 && xi < 1)) throw ValidationError("xi must lie in (0, 1)");
}
}  // namespace

Cx psi_y(const Cx& z, const Real& xi) {
  if (z.re == 0 && z.im == 0) throw ValidationError("psi_y: z = 0");
  Cx u = principal_sqrt(Cx(Real(1)) - z);
  Cx f = Cx(Real(1)) - u;
  return (2 * xi) * log(f) - (xi + 1) * log(z);
}

Cx psi_x(const Cx& z, const Real& xi) {
  if (z.re == 0 && z.im == 0) throw ValidationError("psi_x: z = 0");
  Cx u = principal_sqrt(Cx(Real(1)) - z);
  Cx w = principal_sqrt(Cx(Real(1)) - z + u);
  Cx f = Cx(Real(1)) + u - sqrt2() * w;
  return (2 * xi) * log(f) - (xi + 1) * log(z);
}

Real psi_y(const Real& z, const Real& xi) {
  if (!(z > 0 && z < 1)) throw ValidationError("psi_y: real path needs z in (0,1)");
  Real u = sqrt(1 - z);
  return 2 * xi * log(1 - u) - (xi + 1) * log(z);
}

Real psi_x(const Real& z, const Real& xi) {
  if (!(z > 0 && z < 1)) throw ValidationError("psi_x: real path needs z in (0,1)");
  Real u = sqrt(1 - z);
  Real f = 1 + u - sqrt2() * sqrt(u * u + u);
  return 2 * xi * log(f) - (xi + 1) * log(z);
}

Real phi_y(const Real& xi) {
  check_xi_open_unit(xi);
  return (xi - 1) * log(1 - xi) - (xi + 1) * log(1 + xi);
}

Real u0_x(const Real& xi) {
  check_xi_open_unit(xi);
  Real disc = sqrt(81 - 6 * xi * xi);
  Real c = 54 + 6 * disc;
  Real c3 = cbrt(c);
  Real x23 = cbrt(xi * xi);
  return x23 * c3 / 6 + x23 * x23 / c3;
}

Real phi_x(const Real& xi) { return psi_x(Real(1 - u0_x(xi) * u0_x(xi)), xi); }

SaddleData saddle_y(const Real& xi) {
  check_xi_open_unit(xi);
  SaddleData s;
  s.axis = Axis::Y;
  s.xi = xi;
  s.u0 = xi;
  s.z0 = 1 - xi * xi;
  s.phi = phi_y(xi);
  Real xi2 = xi * xi;
  s.psi2 = 1 / (2 * xi2 * (1 - xi2));
  s.psi3 = (3 - 7 * xi2) / (4 * xi2 * xi2 * (1 - xi2) * (1 - xi2));
  return s;
}

SaddleData saddle_x(const Real& xi) {
  check_xi_open_unit(xi);
  SaddleData s;
  s.axis = Axis::X;
  s.xi = xi;
  s.u0 = u0_x(xi);
  s.z0 = 1 - s.u0 * s.u0;
  s.phi = psi_x(s.z0, xi);
  Real u = s.u0;
  // Two printed forms exist for psi2; they are algebraically identical
  // ((2u+3) z0 = (1+2z0-u)(1+u) given u^2 = 1-z0) and both match the
  // numerical second derivative.
  s.psi2 = (2 * u + 3) / (4 * u * u * (1 - u) * (1 + u) * (1 + u));
  s.psi3 = (-16 * u * u - 24 * u + 19) / (16 * u * u * u * u * (1 - u) * (1 - u) * (1 + u));
  return s;
}

namespace {
Real psi_on_axis(Axis axis, const Real& z, const Real& xi) {
  return axis == Axis::Y ? psi_y(z, xi) : psi_x(z, xi);
}
}  // namespace

Real saddle_residual(Axis axis, const Real& xi) {
  SaddleData s = axis == Axis::Y ? saddle_y(xi) : saddle_x(xi);
  Real h = Real("1e-10");
  if (s.z0 < 8 * h || 1 - s.z0 < 8 * h) {
    if (s.z0 < 1 - s.z0)
      h = s.z0 / 16;
    else
      h = (1 - s.z0) / 16;
  }
  Real fp = (-psi_on_axis(axis, s.z0 + 2 * h, xi) + 8 * psi_on_axis(axis, s.z0 + h, xi) -
             8 * psi_on_axis(axis, s.z0 - h, xi) + psi_on_axis(axis, s.z0 - 2 * h, xi)) /
            (12 * h);
  return fabs(fp);
}

Real psi2_fd(Axis axis, const Real& xi) {
  SaddleData s = axis == Axis::Y ? saddle_y(xi) : saddle_x(xi);
  Real h = Real("1e-7");
  if (s.z0 < 8 * h || 1 - s.z0 < 8 * h) {
    if (s.z0 < 1 - s.z0)
      h = s.z0 / 16;
    else
      h = (1 - s.z0) / 16;
  }
  Real f0 = psi_on_axis(axis, s.z0, xi);
  Real fp1 = psi_on_axis(axis, s.z0 + h, xi), fm1 = psi_on_axis(axis, s.z0 - h, xi);
  Real fp2 = psi_on_axis(axis, s.z0 + 2 * h, xi), fm2 = psi_on_axis(axis, s.z0 - 2 * h, xi);
  return (-fp2 + 16 * fp1 - 30 * f0 + 16 * fm1 - fm2) / (12 * h * h);
}

YTaylor y_taylor(const Real& xi, const Real& t, const Real& a, const Real& alpha) {
  if (xi < 0 || xi > a || fabs(t) > alpha)
    throw ValidationError("y_taylor: (xi, t) outside the configured window");
  if (alpha >= 1 - a)
    throw ValidationError("y_taylor: series requires alpha < 1 - a");
  YTaylor out;
  // PsiBar(t) = phi + sum_{n>=1} [(-i)^{n+1}/(1-u)^n + i^{n+1}/(1+u)^n] t^{n+1}/(n+1).
  Real phi = xi == 0 ? Real(0) : phi_y(xi);
  Cx acc(phi);
  Real inv_m = 1 / (1 - xi), inv_p = 1 / (1 + xi);
  Cx ipow{Real(0), Real(1)};   // i^{n+1} at n = 1 is i^2
  Cx mpow{Real(0), Real(-1)};  // (-i)^{n+1} at n = 1 is (-i)^2
  Real pm = inv_m, pp = inv_p, tn = t;
  Real eps = ldexp(Real(1), -static_cast<int>(precision_bits()) - 8);
  for (int n = 1; n < 100000; ++n) {
    mpow *= Cx(Real(0), Real(-1));
    ipow *= Cx(Real(0), Real(1));
    Cx coef = Cx(pm) * mpow + Cx(pp) * ipow;
    tn *= t;  // t^{n+1}
    acc += coef * (tn / (n + 1));
    Real bound = (pm + pp) * fabs(tn);
    if (bound < eps * (1 + fabs(phi))) break;
    pm *= inv_m;
    pp *= inv_p;
  }
  out.value = acc;
  // Uniform remainder constant from the proof majorant:
  //   C = (4/3) a/(1-a^2)^2 + alpha * sum_{n>=0} ((2-a)/(1-a))^{n+3} alpha^n/(n+4).
  Real ratio = (2 - a) / (1 - a);
  Real s = 0, rp = ratio * ratio * ratio, ap = 1;
  for (int n = 0; n < 100000; ++n) {
    Real term = rp * ap / (n + 4);
    s += term;
    if (term < eps) break;
    rp *= ratio;
    ap *= alpha;
    if (ratio * alpha >= 1) throw ValidationError("y_taylor: majorant diverges, shrink alpha");
  }
  out.remainder_bound = Real(4) / 3 * a / ((1 - a * a) * (1 - a * a)) + alpha * s;
  return out;
}

XTaylorCoeffs x_taylor_coeffs(const Real& xi, const Real& beta, std::size_t order) {
  if (!(xi > 0 && xi < 1))
    throw ValidationError("x_taylor_coeffs: xi outside (0, 1)");
  XTaylorCoeffs c;
  c.xi = xi;
  c.v = sqrt(u0_x(xi));
  c.beta = beta;
  if (!(c.v < Real(0.75)))
    throw ValidationError("x_taylor_coeffs: defining series diverges (xi too large)");

  Real eps = ldexp(Real(1), -static_cast<int>(precision_bits()) - 16);

  // The g_m tails decay like C(h,m) v^h; size H so v^H is negligible with
  // generous headroom for the polynomial factor.
  double lv = -static_cast<double>(log(c.v));
  double le = -static_cast<double>(log(eps));
  std::size_t H = static_cast<std::size_t>(le / lv) + 8 * order + 64;
  if (H > 20000) throw ValidationError("x_taylor_coeffs: truncation too large");

  c.b.resize(H / 2 + 2);
  {
    // b_n = sum_{i<=n/2} C(1/2, n-2i), exact prefix sums over the
    // ratio-recurrence binomials.
    std::vector<Rational> ch(H + 2);
    ch[0] = 1;
    for (std::size_t m = 1; m < ch.size(); ++m)
      ch[m] = ch[m - 1] * Rational(3 - 2 * static_cast<long>(m), 2 * static_cast<long>(m));
    for (std::size_t n = 0; n < c.b.size(); ++n) {
      Rational s = 0;
      for (std::size_t i = 0; 2 * i <= n; ++i) s += ch[n - 2 * i];
      c.b[n] = to_real(s);
    }
  }

  c.d.assign(H + 1, Real(0));
  c.dp.assign(H + 1, Cx(Real(0)));
  for (std::size_t h = 1; h <= H; ++h) {
    if (h % 4 == 0) {
      Real val = Real(4) / static_cast<long>(h);  // 1/(h/4)
      c.d[h] = val;
      c.dp[h] = Cx(val);
    } else if (h % 2 == 1) {
      std::size_t n = (h - 1) / 2;
      Real base = 2 * sqrt(Real(2)) * xi * c.b[n] / static_cast<long>(h);
      c.d[h] = -base;
      c.dp[h] = Cx(Real(0), (n % 2 == 0) ? base : -base);
    }
  }

  c.g.assign(order + 1, Real(0));
  c.gp.assign(order + 1, Cx(Real(0)));
  for (std::size_t m = 0; m <= order; ++m) {
    Real acc = 0;
    Cx accp(Real(0));
    Real vpow = 1;  // v^{h-m}
    for (std::size_t h = m; h <= H; ++h) {
      Real bin = Real(Int(binom_int(h, m)));
      if (c.d[h] != 0) acc += bin * c.d[h] * vpow;
      if (!(c.dp[h].re == 0 && c.dp[h].im == 0)) accp += c.dp[h] * (bin * vpow);
      vpow *= c.v;
    }
    c.g[m] = acc;
    c.gp[m] = accp;
  }

  auto pick = [&](std::size_t m) { return m <= order ? Cx(c.g[m]) : Cx(Real(0)); };
  auto pickp = [&](std::size_t m) { return m <= order ? c.gp[m] : Cx(Real(0)); };
  c.a2 = pick(2);
  c.a3 = pick(3);
  c.a4 = pick(4);
  c.a2p = pickp(2);
  c.a3p = pickp(3);
  c.a4p = pickp(4);
  return c;
}

Cx psi_bar_from_coeffs(const XTaylorCoeffs& c, const Real& t, int branch) {
  if (branch != 1 && branch != 2) throw ValidationError("psi_bar_from_coeffs: branch is 1 or 2");
  Cx e{cos(c.beta), sin(c.beta)};
  Cx acc(Real(0));
  Cx z = e * Cx(t);  // e^{i beta} t
  // Horner over m.
  std::size_t m = branch == 1 ? c.g.size() : c.gp.size();
  while (m-- > 0) {
    Cx gm = branch == 1 ? Cx(c.g[m]) : c.gp[m];
    acc = acc * z + gm;
  }
  return acc;
}

std::pair<Real, Real> real_imag_root_split(const Real& xi, const Real& t) {
  Real r = sqrt(xi * xi + t * t);
  Real a = sqrt((r + xi) / 2);
  Real b = sqrt((r - xi) / 2);
  if (t > 0) b = -b;
  if (t == 0) b = 0;
  return {a, b};
}

bool beta_in_sector(const Real& beta) {
  Real pi = boost::math::constants::pi<Real>();
  Real ab = fabs(beta);
  return ab >= pi / 4 && ab <= 3 * pi / 8;
}

}  // namespace comb::saddle

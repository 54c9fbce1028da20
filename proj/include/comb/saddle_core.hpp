// The auxiliary functions Psi_xi for both axes, their saddle points, the
// rate functions, and the Taylor-coefficient machinery used by the small-xi
// contour estimates.
//
// Conventions (series index n, distance parameter k, xi = k/n):
//   Y axis:  Psi_xi(z) = 2 xi log(1 - sqrt(1-z)) - (xi+1) log z,
//            saddle z0 = 1 - xi^2, phi(xi) = (xi-1)log(1-xi) - (xi+1)log(1+xi).
//   X axis:  Psi_xi(z) = 2 xi log(1 + sqrt(1-z) - sqrt(2) sqrt(1-z+sqrt(1-z)))
//                        - (xi+1) log z,
//            saddle z0 = 1 - u0^2 with u0 the positive root of
//            2 u^3 = xi^2 (1 + u)  (closed Cardano form below).
// In both cases exp(n Psi_xi(z)) = F(z)^{2k} / z^n ties Psi to the
// generating functions.
#pragma once

#include "comb/axis.hpp"
#include "comb/complexval.hpp"
#include "comb/numeric.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace comb::saddle {

struct SaddleData {
  Axis axis;
  Real xi;
  Real z0;    // saddle point in (0, 1)
  Real u0;    // sqrt(1 - z0)
  Real phi;   // rate value Psi_xi(z0) <= 0
  Real psi2;  // Psi''_xi(z0)
  Real psi3;  // Psi'''_xi(z0)
};

Cx psi_y(const Cx& z, const Real& xi);
Cx psi_x(const Cx& z, const Real& xi);
// Real-axis fast paths, z in (0, 1).
Real psi_y(const Real& z, const Real& xi);
Real psi_x(const Real& z, const Real& xi);

// Rate functions phi(xi) = Psi_xi(z0(xi)).
Real phi_y(const Real& xi);
Real phi_x(const Real& xi);

// Positive root of 2 u^3 = xi^2 (1 + u):
//   u0 = xi^{2/3} [54 + 6 sqrt(81 - 6 xi^2)]^{1/3} / 6
//      + xi^{4/3} [54 + 6 sqrt(81 - 6 xi^2)]^{-1/3}.
Real u0_x(const Real& xi);

SaddleData saddle_y(const Real& xi);
SaddleData saddle_x(const Real& xi);

// |dPsi/dz| at the claimed saddle via high-order central differences; the
// numerical ground truth for the printed closed forms.
Real saddle_residual(Axis axis, const Real& xi);
// d^2 Psi / dz^2 at z0 by central differences.
Real psi2_fd(Axis axis, const Real& xi);

// Psi-bar_xi(t) = Psi_xi(1 - (xi - i t)^2) evaluated through its Taylor
// series in t (the u-plane segment route), plus the uniform remainder
// constant C with |R(xi, t)| <= C |t|^3 valid for xi in [0, a], |t| <= alpha.
struct YTaylor {
  Cx value;
  Real remainder_bound;
};
YTaylor y_taylor(const Real& xi, const Real& t, const Real& a, const Real& alpha);

// v-plane Taylor data for the X axis:
//   PsiTilde_1(v) = sum d_h v^h   (arg v in [-pi/4, 0]),
//   PsiTilde_2(v) = sum d'_h v^h  (arg v in [pi/4, pi/2]),
// with d_{4n} = d'_{4n} = 1/n, d_{2n+1} = -2 sqrt(2) xi b_n/(2n+1),
// d'_{2n+1} = 2 sqrt(2) i xi (-1)^n b_n/(2n+1), b_n = sum_i C(1/2, n-2i),
// every other coefficient zero; re-centering at v(xi) = sqrt(u0) gives
//   PsiBar_{xi,j}(t) = sum_m e^{i m beta} g_m t^m,
//   g_m = sum_{h>=m} C(h,m) d_h v^{h-m}.
struct XTaylorCoeffs {
  Real xi;
  Real v;     // v(xi) = sqrt(u0(xi))
  Real beta;  // stored for reconstruction convenience
  std::vector<Real> b;
  std::vector<Real> d;
  std::vector<Cx> dp;
  std::vector<Real> g;   // from d  (branch 1); g[0] = phi, g[1] ~ 0
  std::vector<Cx> gp;    // from d' (branch 2)
  Cx a2, a3, a4;         // g_2..g_4
  Cx a2p, a3p, a4p;      // g'_2..g'_4
};

XTaylorCoeffs x_taylor_coeffs(const Real& xi, const Real& beta, std::size_t order);

// sum_m e^{i m beta} g_m t^m over the stored coefficients (branch 1 or 2).
Cx psi_bar_from_coeffs(const XTaylorCoeffs& c, const Real& t, int branch);

// sqrt(xi - i t) = a + i b with
//   a = sqrt((sqrt(xi^2+t^2) + xi)/2),  b = sign(-t) sqrt((sqrt(xi^2+t^2) - xi)/2).
std::pair<Real, Real> real_imag_root_split(const Real& xi, const Real& t);

// The admissible contour angles: cos(2b), cos(3b), cos(4b) all <= 0 exactly
// on [pi/4, 3pi/8] and its mirror.
bool beta_in_sector(const Real& beta);

}  // namespace comb::saddle

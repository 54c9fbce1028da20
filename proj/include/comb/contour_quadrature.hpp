// Numerical Cauchy integration of p^{(2n)} = (1/2 pi i) \oint G F^{2k} z^{-(n+1)} dz
// on the four contour families used by the saddle analysis, with separate
// reporting of the near-singularity piece (A) and the far arc (B).
//
// Families:
//   SaddleCircle  - circle of radius z0(xi); (A) is the arc |t| <= alpha.
//   UPlaneHybrid  - image of the u-plane segment u = xi - i t, |t| <= alpha
//                   (z = 1 - u^2), closed by a circular arc (Y axis).
//   VPlaneQuarter - image of the v-plane ray v = v(xi) + e^{-i pi/4} t and its
//                   conjugate (z = 1 - v^4), closed by an arc (X axis).
//   VPlaneTwoBeta - v-plane path with beta = -pi/3 up to the real-axis touch
//                   t0 = 2 v(xi)/(sqrt(3)-1), then beta = +pi/3, conjugated,
//                   closed by an arc (X axis).
#pragma once

#include "comb/axis.hpp"
#include "comb/complexval.hpp"
#include "comb/numeric.hpp"

#include <cstdint>
#include <vector>

namespace comb::contour {

enum class ContourKind { SaddleCircle, UPlaneHybrid, VPlaneQuarter, VPlaneTwoBeta };

const char* to_string(ContourKind k);
ContourKind parse_contour_kind(const std::string& s);

struct ContourParams {
  Real alpha{Real(1) / 4};
  // Required clearance of the closing arc from z = 1; 0 means alpha^4/2.
  Real eps0{0};
  // Sample count for the polyline exposed for winding/orientation checks.
  int samples = 720;
};

struct ContourSpec {
  ContourKind kind;
  Axis axis;
  Real xi;
  Real alpha;        // effective segment parameter half-length
  Real t0;           // two-beta switch point (VPlaneTwoBeta only)
  Real arc_radius;   // closing arc radius (z0 for SaddleCircle)
  Real arc_start;    // closing arc start angle in (0, pi)
  std::vector<Cx> points;  // closed once-winding CCW polyline
};

// Throws ValidationError when the closing arc would come closer than eps0
// to the singularity, or on an axis/kind mismatch.
ContourSpec build_contour(ContourKind kind, Axis axis, const Real& xi,
                          const ContourParams& params = {});

// Signed winding number of a closed polyline about the origin.
long winding_number(const std::vector<Cx>& loop);

// log(G(z)) + k log(F^2(z)) - (n+1) log(z) with the axis's F; branch-safe
// because only integer powers are exponentiated.
Cx log_integrand(Axis axis, std::int64_t k, std::int64_t n, const Cx& z);

// Trapezoidal coefficient extraction on |z| = radius with M nodes
// (exponentially convergent; M = 0 selects max(4n, 64)).  Returns
// p^{(2n)}(axis vertex 2k -> o).  Throws ValidationError for radius >= 1,
// ToleranceError when the residual imaginary part is not negligible.
Real cauchy_circle(Axis axis, std::int64_t k, std::int64_t n, const Real& radius,
                   std::int64_t nodes = 0);

// Same, but re-evaluates with doubled nodes and throws ToleranceError when
// the two results differ by more than rel_tol (insufficient nodes).
Real cauchy_circle_checked(Axis axis, std::int64_t k, std::int64_t n, const Real& radius,
                           std::int64_t nodes = 0, const Real& rel_tol = Real("1e-12"));

struct QuadOptions {
  Real rel_tol{Real("1e-12")};
  int gl_order = 30;        // Gauss-Legendre nodes per panel
  int initial_panels = 8;
  int max_doublings = 12;
};

struct SplitResult {
  Cx part_a;  // near-singularity piece(s)
  Cx part_b;  // closing arc
  Real total; // Re(part_a + part_b), imaginary part asserted negligible
};

SplitResult split_integral(const ContourSpec& spec, std::int64_t k, std::int64_t n,
                           const QuadOptions& options = {});

}  // namespace comb::contour

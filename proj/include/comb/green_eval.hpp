// Complex-plane evaluation of the closed-form generating functions with a
// fixed square-root determination: arg in [-pi, pi), which makes
// sqrt(1 - z) holomorphic off the cut [1, inf) and equal on the cut to its
// limit from the upper half-plane.
#pragma once

#include "comb/complexval.hpp"
#include "comb/numeric.hpp"

#include <cstddef>
#include <vector>

namespace comb::green {

// Whether a requested evaluation at z in (1, inf) is an error or uses the
// upper-half-plane continuation.
enum class CutPolicy { Reject, UpperContinuation };

bool on_cut(const Cx& z);

// sqrt(|w|) exp(i arg(w)/2) with arg(w) in [-pi, pi); in particular
// principal_sqrt(-1) = -i.
Cx principal_sqrt(const Cx& w);

// G(z) = sqrt(2)/sqrt(1 - z + sqrt(1-z)); holomorphic on C \ [1, inf).
Cx eval_g(const Cx& z, CutPolicy policy = CutPolicy::Reject);

// F1(z)^2 = ((1 - sqrt(1-z))^2)/z and
// F2(z)^2 = ((1 + sqrt(1-z) - sqrt(2) sqrt(1 - z + sqrt(1-z)))^2)/z.
Cx eval_f1_sq(const Cx& z, CutPolicy policy = CutPolicy::Reject);
Cx eval_f2_sq(const Cx& z, CutPolicy policy = CutPolicy::Reject);

// Green function of the d-dimensional comb in the step variable (singular
// at +-1), by the recursion
//   G_1(z) = 1/sqrt(1-z^2),  G_d = d / sqrt((1 + (d-1)/G_{d-1})^2 - z^2).
Cx eval_gd(int d, const Cx& z, CutPolicy policy = CutPolicy::Reject);

// Independent closed form for d = 3 (used to cross-check the recursion):
//   G_3(z) = 3 / sqrt(3(1-z^2) + 2 sqrt(1-z^2) + 2 sqrt(2) sqrt(1-z^2 + sqrt(1-z^2))).
Cx eval_g3_closed(const Cx& z, CutPolicy policy = CutPolicy::Reject);

// Decomposition G(z) = (1-z)^{-1/4} H(z) + (1-z)^{1/4} K(z) with H, K
// holomorphic near z = 1:
//   H = sqrt(2) sum_m C(-1/2, 2m)   (1-z)^m,
//   K = sqrt(2) sum_m C(-1/2, 2m+1) (1-z)^m.
struct SingularDecomposition {
  std::vector<Real> h;
  std::vector<Real> k;
  Real h_at_one() const { return h.empty() ? Real(0) : h.front(); }
  Real k_at_one() const { return k.empty() ? Real(0) : k.front(); }
};

SingularDecomposition singular_parts(std::size_t order);

// (1-z)^{-1/4} H(z) + (1-z)^{1/4} K(z) from the truncated lists; accurate
// for |1-z| well inside the unit disc around 1.
Cx eval_singular(const SingularDecomposition& d, const Cx& z);

}  // namespace comb::green

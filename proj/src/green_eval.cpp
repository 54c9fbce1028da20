#include "comb/green_eval.hpp"
#include "comb/series_oracle.hpp"

namespace comb::series::detail {
Cx principal_sqrt_scalar(const Cx& w) { return comb::green::principal_sqrt(w); }
}  // namespace comb::series::detail

namespace comb::green {

bool on_cut(const Cx& z) { return z.im == 0 && z.re > 1; }

Cx principal_sqrt(const Cx& w) {
  if (w.im == 0) {
    if (w.re >= 0) return Cx(sqrt(w.re));
    // arg = -pi on the negative real axis (not +pi): the upper-continuity
    // determination for sqrt(1-z) across [1, inf).
    return Cx(Real(0), -sqrt(-w.re));
  }
  Real m = abs(w);
  Real a = sqrt((m + w.re) / 2);
  Real b = sqrt((m - w.re) / 2);
  if (w.im < 0) b = -b;
  return {a, b};
}

namespace {
void check_cut(const Cx& z, CutPolicy policy, const char* who) {
  if (policy == CutPolicy::Reject && on_cut(z))
    throw ValidationError(std::string(who) + ": evaluation on the cut [1, inf) "
                          "requires the upper-continuation policy");
}

const Real& sqrt2() {
  static thread_local Real v;
  static thread_local unsigned bits = 0;
  if (bits != precision_bits()) {
    v = sqrt(Real(2));
    bits = precision_bits();
  }
  return v;
}
}  // namespace

Cx eval_g(const Cx& z, CutPolicy policy) {
  check_cut(z, policy, "eval_g");
  Cx u = principal_sqrt(Cx(Real(1)) - z);
  Cx w = Cx(Real(1)) - z + u;
  return Cx(sqrt2()) / principal_sqrt(w);
}

Cx eval_f1_sq(const Cx& z, CutPolicy policy) {
  check_cut(z, policy, "eval_f1_sq");
  if (z.re == 0 && z.im == 0) throw ValidationError("eval_f1_sq: z = 0");
  Cx u = principal_sqrt(Cx(Real(1)) - z);
  Cx num = Cx(Real(1)) - u;
  return num * num / z;
}

Cx eval_f2_sq(const Cx& z, CutPolicy policy) {
  check_cut(z, policy, "eval_f2_sq");
  if (z.re == 0 && z.im == 0) throw ValidationError("eval_f2_sq: z = 0");
  Cx u = principal_sqrt(Cx(Real(1)) - z);
  Cx w = principal_sqrt(Cx(Real(1)) - z + u);
  Cx num = Cx(Real(1)) + u - sqrt2() * w;
  return num * num / z;
}

Cx eval_gd(int d, const Cx& z, CutPolicy policy) {
  if (d < 1) throw ValidationError("eval_gd: dimension must be >= 1");
  // Singularities sit at both +-1 in the step variable.
  check_cut(z, policy, "eval_gd");
  check_cut(-z, policy, "eval_gd");
  Cx z2 = z * z;
  Cx g = Cx(Real(1)) / principal_sqrt(Cx(Real(1)) - z2);
  for (int j = 2; j <= d; ++j) {
    Cx t = Cx(Real(1)) + Cx(Real(j - 1)) / g;
    g = Cx(Real(j)) / principal_sqrt(t * t - z2);
  }
  return g;
}

Cx eval_g3_closed(const Cx& z, CutPolicy policy) {
  check_cut(z, policy, "eval_g3_closed");
  check_cut(-z, policy, "eval_g3_closed");
  Cx one_minus_z2 = Cx(Real(1)) - z * z;
  Cx s = principal_sqrt(one_minus_z2);
  Cx w = principal_sqrt(one_minus_z2 + s);
  Cx rad = Real(3) * one_minus_z2 + Real(2) * s + (Real(2) * sqrt2()) * w;
  return Cx(Real(3)) / principal_sqrt(rad);
}

SingularDecomposition singular_parts(std::size_t order) {
  SingularDecomposition d;
  d.h.reserve(order + 1);
  d.k.reserve(order + 1);
  Real r2 = sqrt2();
  for (std::size_t m = 0; m <= order; ++m) {
    d.h.push_back(r2 * to_real(binom_neg_half(2 * static_cast<unsigned>(m))));
    d.k.push_back(r2 * to_real(binom_neg_half(2 * static_cast<unsigned>(m) + 1)));
  }
  return d;
}

Cx eval_singular(const SingularDecomposition& d, const Cx& z) {
  Cx w = Cx(Real(1)) - z;
  Cx h(Real(0)), k(Real(0));
  for (std::size_t i = d.h.size(); i-- > 0;) h = h * w + Cx(d.h[i]);
  for (std::size_t i = d.k.size(); i-- > 0;) k = k * w + Cx(d.k[i]);
  Cx quarter_root = principal_sqrt(principal_sqrt(w));
  return h / quarter_root + k * quarter_root;
}

}  // namespace comb::green

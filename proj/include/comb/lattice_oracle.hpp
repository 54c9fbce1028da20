// Exact simple-random-walk probabilities on the 2-comb by sparse dynamic
// programming with exact rational arithmetic.  This is the ground-truth
// oracle every other module is validated against.
//
// The 2-comb keeps the horizontal edges of Z^2 only on the x-axis, so a
// vertex (x, y) has degree 4 when y = 0 and degree 2 otherwise.  All
// n-step probabilities are dyadic rationals.
#pragma once

#include "comb/numeric.hpp"

#include <compare>
#include <cstdint>
#include <map>

namespace comb::lattice {

struct CombVertex {
  std::int64_t x{0};  // position along the backbone
  std::int64_t y{0};  // height on the tooth at x
  auto operator<=>(const CombVertex&) const = default;
};

inline constexpr CombVertex kOrigin{0, 0};

int degree(const CombVertex& v);

// Tree metric: along a tooth when both points sit on the same side of one
// tooth, otherwise down to the backbone, across, and up.
std::int64_t graph_distance(const CombVertex& u, const CombVertex& v);

inline constexpr std::uint64_t kDefaultExactCap = 300;

// Sparse distribution of the walk after `step()` steps, exact rationals.
class DistTable {
 public:
  using Map = std::map<CombVertex, Rational>;

  static DistTable delta(const CombVertex& start);

  // One step of the simple random walk; mass is split equally among
  // neighbours, total mass preserved exactly.
  void advance();
  void advance(std::uint64_t steps);

  std::uint64_t step() const { return step_; }
  const Map& entries() const { return entries_; }
  // Probability at v (zero if v is not in the support).
  Rational at(const CombVertex& v) const;
  Rational mass() const;

 private:
  std::uint64_t step_{0};
  Map entries_;
};

// p^{(n)}(start -> target), exact. Throws InfeasibleError when n exceeds
// the exact-mode cap (callers should fall back to the series or contour
// oracle).
Rational exact_prob(const CombVertex& start, const CombVertex& target, std::uint64_t n,
                    std::uint64_t cap = kDefaultExactCap);

// p^{(2n+1)}((0, 2k+1) -> o) through the even-step identity
//   p^{(2n+1)}(2k+1, 0) = 1/2 (p^{(2n)}(2k+2, 0) + p^{(2n)}(2k, 0)).
Rational odd_from_even_y(std::uint64_t k, std::uint64_t n,
                         std::uint64_t cap = kDefaultExactCap);

}  // namespace comb::lattice

#include "comb/lattice_oracle.hpp"

#include <cstdlib>

namespace comb::lattice {

int degree(const CombVertex& v) { return v.y == 0 ? 4 : 2; }

std::int64_t graph_distance(const CombVertex& u, const CombVertex& v) {
  if (u.x == v.x) {
    bool same_side = (u.y >= 0 && v.y >= 0) || (u.y <= 0 && v.y <= 0);
    if (same_side) return std::abs(u.y - v.y);
  }
  return std::abs(u.y) + std::abs(u.x - v.x) + std::abs(v.y);
}

DistTable DistTable::delta(const CombVertex& start) {
  DistTable t;
  t.entries_[start] = 1;
  return t;
}

void DistTable::advance() {
  Map next;
  const Rational quarter(1, 4);
  const Rational half(1, 2);
  for (const auto& [v, p] : entries_) {
    if (v.y == 0) {
      Rational q = p * quarter;
      next[{v.x - 1, 0}] += q;
      next[{v.x + 1, 0}] += q;
      next[{v.x, 1}] += q;
      next[{v.x, -1}] += q;
    } else {
      Rational q = p * half;
      next[{v.x, v.y - 1}] += q;
      next[{v.x, v.y + 1}] += q;
    }
  }
  entries_ = std::move(next);
  ++step_;
}

void DistTable::advance(std::uint64_t steps) {
  for (std::uint64_t i = 0; i < steps; ++i) advance();
}

Rational DistTable::at(const CombVertex& v) const {
  auto it = entries_.find(v);
  return it == entries_.end() ? Rational(0) : it->second;
}

Rational DistTable::mass() const {
  Rational m = 0;
  for (const auto& [v, p] : entries_) m += p;
  return m;
}

Rational exact_prob(const CombVertex& start, const CombVertex& target, std::uint64_t n,
                    std::uint64_t cap) {
  if (n > cap) {
    throw InfeasibleError("exact_prob: n exceeds the exact-mode cap (" + std::to_string(n) +
                          " > " + std::to_string(cap) + ")");
  }
  // Parity / range short-circuits keep sweeps cheap.
  std::int64_t d = graph_distance(start, target);
  if (static_cast<std::uint64_t>(d) > n) return 0;
  if ((static_cast<std::uint64_t>(d) + n) % 2 != 0) return 0;
  DistTable t = DistTable::delta(start);
  t.advance(n);
  return t.at(target);
}

Rational odd_from_even_y(std::uint64_t k, std::uint64_t n, std::uint64_t cap) {
  Rational a = exact_prob({0, static_cast<std::int64_t>(2 * k + 2)}, kOrigin, 2 * n, cap);
  Rational b = exact_prob({0, static_cast<std::int64_t>(2 * k)}, kOrigin, 2 * n, cap);
  return (a + b) / 2;
}

}  // namespace comb::lattice

#pragma once

#include <string>

#include "comb/numeric.hpp"

namespace comb {

// Which principal direction of the comb a quantity refers to: Y walks along
// a tooth, X along the backbone.
enum class Axis { Y, X };

inline const char* to_string(Axis a) { return a == Axis::Y ? "y" : "x"; }

inline Axis parse_axis(const std::string& s) {
  if (s == "y" || s == "Y") return Axis::Y;
  if (s == "x" || s == "X") return Axis::X;
  throw ValidationError("axis must be 'x' or 'y'");
}

}  // namespace comb

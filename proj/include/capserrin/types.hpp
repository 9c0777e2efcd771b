#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace capserrin {

using Vec2 = Eigen::Vector2d;

/// Thrown on invalid user input (bad cap parameters, malformed domains,
/// out-of-range mesh sizes). Maps to CLI exit code 2.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a numerical procedure fails (factorization breakdown,
/// refinement budget exceeded, non-convergence). Maps to CLI exit code 1.
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kVersion = "capserrin 0.1.0";

/// Rotate a 2D vector by +90 degrees.
inline Vec2 perp(const Vec2& v) { return Vec2(-v.y(), v.x()); }

/// z-component of the 2D cross product.
inline double cross2(const Vec2& a, const Vec2& b) {
  return a.x() * b.y() - a.y() * b.x();
}

}  // namespace capserrin

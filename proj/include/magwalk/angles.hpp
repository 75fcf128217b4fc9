#pragma once

#include <cmath>

namespace magwalk {

inline constexpr double two_pi = 6.28318530717958647692528676655900577;

/// Reduce an angle into [0, 2*pi).
inline double wrap_angle(double a) {
  double r = std::fmod(a, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}

/// Geodesic distance between two angles on the circle.
inline double circle_distance(double a, double b) {
  double d = std::fabs(wrap_angle(a) - wrap_angle(b));
  return d > two_pi - d ? two_pi - d : d;
}

inline bool angles_close(double a, double b, double tol) {
  return circle_distance(a, b) <= tol;
}

}  // namespace magwalk

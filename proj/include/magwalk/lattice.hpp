#pragma once

#include <Eigen/Core>

#include "magwalk/gauge.hpp"

namespace magwalk {

inline constexpr int spin_up = +1;
inline constexpr int spin_down = -1;

inline int spin_index(int spin) { return spin == spin_up ? 0 : 1; }

/// Finite window [c1-L, c1+L] x [c2-L, c2+L] with two spin components per
/// site. Flat indices enumerate x1-major, then x2, then spin (+ before -).
class Box {
 public:
  explicit Box(int halfwidth, Site center = Site{0, 0});

  int halfwidth() const { return halfwidth_; }
  Site center() const { return center_; }
  int side() const { return 2 * halfwidth_ + 1; }
  int sites() const { return side() * side(); }
  int dim() const { return 2 * sites(); }

  bool contains(Site x) const;
  int site_index(Site x) const;
  int index(Site x, int spin) const { return 2 * site_index(x) + spin_index(spin); }
  Site site_at(int site_index) const;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  int halfwidth_;
  Site center_;
};

/// Amplitudes psi(x, s) over a box.
struct StateVector {
  Box box;
  Eigen::VectorXcd amps;

  static StateVector zero(const Box& b);
  static StateVector point_mass(const Box& b, Site x, int spin);

  /// Amplitude at (x, s); zero outside the box.
  cplx value(Site x, int spin) const;
  cplx& at(Site x, int spin);

  double norm() const { return amps.norm(); }
};

}  // namespace magwalk

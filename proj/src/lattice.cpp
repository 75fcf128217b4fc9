#include "magwalk/lattice.hpp"

#include <stdexcept>

namespace magwalk {

Box::Box(int halfwidth, Site center) : halfwidth_(halfwidth), center_(center) {
  if (halfwidth < 0) throw std::invalid_argument("Box: halfwidth must be non-negative");
}

bool Box::contains(Site x) const {
  return std::abs(x.x1 - center_.x1) <= halfwidth_ && std::abs(x.x2 - center_.x2) <= halfwidth_;
}

int Box::site_index(Site x) const {
  const int i1 = x.x1 - center_.x1 + halfwidth_;
  const int i2 = x.x2 - center_.x2 + halfwidth_;
  return i1 * side() + i2;
}

Site Box::site_at(int site_index) const {
  const int n = side();
  return Site{site_index / n - halfwidth_ + center_.x1, site_index % n - halfwidth_ + center_.x2};
}

StateVector StateVector::zero(const Box& b) { return StateVector{b, Eigen::VectorXcd::Zero(b.dim())}; }

StateVector StateVector::point_mass(const Box& b, Site x, int spin) {
  if (!b.contains(x)) throw std::invalid_argument("point_mass: site outside box");
  StateVector psi = zero(b);
  psi.amps(b.index(x, spin)) = 1.0;
  return psi;
}

cplx StateVector::value(Site x, int spin) const { return box.contains(x) ? amps(box.index(x, spin)) : cplx(0.0, 0.0); }

cplx& StateVector::at(Site x, int spin) {
  if (!box.contains(x)) throw std::out_of_range("StateVector::at: site outside box");
  return amps(box.index(x, spin));
}

}  // namespace magwalk

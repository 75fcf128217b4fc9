#include "magwalk/boundary.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace magwalk {

namespace {

// The wall is the perimeter of the square [-L-1, L]^2, whose center sits at
// (-1/2, -1/2). Work in doubled coordinates to keep half-integers exact.
int doubled_ring_norm(Site x) { return std::max(std::abs(2 * x.x1 + 1), std::abs(2 * x.x2 + 1)); }

}  // namespace

bool on_decoupling_wall(Site x, int L) { return doubled_ring_norm(x) == 2 * L + 1; }

int wall_chebyshev_distance(Site x, int L) { return std::abs(doubled_ring_norm(x) - (2 * L + 1)) / 2; }

bool BoundarySets::on_wall(Site x) const { return on_decoupling_wall(x, L); }

bool BoundarySets::in_wall_2(Site x) const { return wall_chebyshev_distance(x, L) <= 2; }

BoundarySets boundary_sets(int L) {
  if (L < 2) throw std::invalid_argument("boundary_sets: L must be >= 2");
  BoundarySets out;
  out.L = L;

  for (int x1 = -L; x1 <= L; ++x1)
    for (int x2 = -L; x2 <= L; ++x2)
      if (std::abs(x1) == L || std::abs(x2) == L) out.boundary_ring.push_back(Site{x1, x2});

  for (int x1 = -L - 3; x1 <= L + 3; ++x1)
    for (int x2 = -L - 3; x2 <= L + 3; ++x2) {
      const Site x{x1, x2};
      if (on_decoupling_wall(x, L)) out.wall.push_back(x);
      if (wall_chebyshev_distance(x, L) <= 2) out.wall_2.push_back(x);
    }

  for (int x1 = -L; x1 <= L; ++x1)
    for (int x2 = -L; x2 <= L; ++x2) {
      const Site x{x1, x2};
      if (x1 == -L || x2 == -L || x2 == L - 1 || x2 == L) out.determining.push_back(x);
      if (x1 == -L || x2 == -L || x2 == -L + 1 || x2 == L) out.determining_offdiag.push_back(x);
    }

  return out;
}

}  // namespace magwalk

#pragma once

#include <vector>

#include "magwalk/gauge.hpp"

namespace magwalk {

/// Site sets controlling the unitary decoupling of a walk around the box
/// Lambda_L = [-L, L]^2:
///
///   boundary_ring        the outer ring of Lambda_L
///   wall                 the perimeter of [-L-1, L]^2 (top/right edges of
///                        Lambda_L plus bottom/left edges one step outside)
///   wall_2               sites within Chebyshev distance 2 of the wall
///   determining          {x1 = -L} plus the rows x2 in {-L, L-1, L}
///   determining_offdiag  {x1 = -L} plus the rows x2 in {-L, -L+1, L}
struct BoundarySets {
  int L = 0;
  std::vector<Site> boundary_ring;
  std::vector<Site> wall;
  std::vector<Site> wall_2;
  std::vector<Site> determining;
  std::vector<Site> determining_offdiag;

  bool on_wall(Site x) const;
  bool in_wall_2(Site x) const;
};

/// Explicit boundary sets for a given L >= 2.
BoundarySets boundary_sets(int L);

/// Membership tests usable without materializing the full lists.
bool on_decoupling_wall(Site x, int L);
int wall_chebyshev_distance(Site x, int L);

}  // namespace magwalk

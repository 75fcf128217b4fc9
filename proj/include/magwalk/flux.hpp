#pragma once

#include <cstdint>
#include <vector>

namespace magwalk {

/// Reduced rational magnetic flux Phi = 2*pi*num/den with num in [0, den).
struct Flux {
  std::int64_t num = 0;
  std::int64_t den = 1;

  /// Flux angle in [0, 2*pi).
  double value() const;

  /// The flux of -Phi mod 2*pi, i.e. (den-num)/den reduced.
  Flux negated() const;

  friend bool operator==(const Flux&, const Flux&) = default;
};

/// Reduce p/q to lowest terms with the numerator normalized into [0, q).
/// Throws std::invalid_argument for q < 1.
Flux reduce_flux(std::int64_t p, std::int64_t q);

/// Continued-fraction convergents of a target in [0, 1), stored as fluxes.
/// Convergents that reduce to flux zero (p/q with q | p) are skipped.
struct ConvergentSequence {
  double target = 0.0;
  std::vector<Flux> convergents;
};

/// First n convergents of the golden mean (sqrt(5)-1)/2: 1/2, 2/3, 3/5, ...
ConvergentSequence golden_convergents(int n);

/// First n nontrivial continued-fraction convergents of an arbitrary target.
ConvergentSequence convergents_of(double target, int n);

/// All reduced p/q with 1 <= q <= q_max, sorted by (q, p). Includes 0/1.
std::vector<Flux> reduced_fluxes_up_to(std::int64_t q_max);

}  // namespace magwalk

#pragma once

#include <functional>

#include "magwalk/coin.hpp"
#include "magwalk/flux.hpp"

namespace magwalk {

/// A site of the Z^2 lattice.
struct Site {
  int x1 = 0;
  int x2 = 0;

  friend bool operator==(const Site&, const Site&) = default;
  friend auto operator<=>(const Site&, const Site&) = default;

  Site shifted(int d1, int d2) const { return Site{x1 + d1, x2 + d2}; }
};

enum class GaugeKind { symmetric, landau, transformed };

const char* to_string(GaugeKind k);
GaugeKind gauge_kind_from_string(const std::string& s);

/// Position- and direction-dependent unit phases U_alpha(x) realizing a
/// homogeneous magnetic field of flux Phi per plaquette.
///
/// symmetric:  U_1(x) = exp(-i x2 Phi/2),  U_2(x) = exp(+i x1 Phi/2)
/// landau:     U_1(x) = exp(-i x2 Phi),    U_2(x) = 1
/// transformed: G(x+e_a) U_a(x) G(x)^-1 for a base gauge and unit phases G.
class GaugeField {
 public:
  static GaugeField symmetric(Flux f);
  static GaugeField landau(Flux f);
  static GaugeField transformed(const GaugeField& base, std::function<cplx(Site)> g);

  GaugeKind kind() const { return kind_; }
  Flux flux() const { return flux_; }

  /// U_alpha(x) for alpha in {1, 2}.
  cplx phase(Site x, int alpha) const;

  /// Plaquette angle F_12(x) in [0, 2*pi), from the magnetic-translation
  /// commutator  U_1(x)* U_2(x+e1)* U_1(x+e2) U_2(x) = exp(-i F_12(x)).
  double plaquette(Site x) const;

  /// G(x); identity phase unless the gauge is transformed.
  cplx site_transform(Site x) const;

  /// True when U_alpha commutes with the translation t_alpha, so the walk
  /// admits a position-dependent-coin form with plain shifts.
  bool has_coin_form() const { return kind_ != GaugeKind::transformed; }

  /// Coins of the coin-form walk: coin_j(x) = diag(U_j(x), conj U_j(x)) * C_H.
  Coin coin1(Site x) const;
  Coin coin2(Site x) const;

 private:
  GaugeField(GaugeKind kind, Flux flux) : kind_(kind), flux_(flux) {}

  cplx base_phase(Site x, int alpha) const;

  GaugeKind kind_;
  Flux flux_;
  GaugeKind base_kind_ = GaugeKind::symmetric;
  std::function<cplx(Site)> transform_;
};

/// Deterministic pseudo-random unit phases G(x), for gauge-transform tests.
std::function<cplx(Site)> random_site_phases(std::uint64_t seed);

}  // namespace magwalk

#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <functional>
#include <optional>

#include "magwalk/lattice.hpp"

namespace magwalk {

enum class WalkKind { magnetic2d, decoupled2d, amo1d_sigma1, amo1d_sigma2 };

const char* to_string(WalkKind k);

/// Site-local coins of a walk S1 C1 S2 C2.
struct CoinPair {
  std::function<Coin(Site)> c1;
  std::function<Coin(Site)> c2;
};

/// Quasi-periodic coins equivalent to the symmetric-gauge magnetic walk:
/// C1(x) = exp(-i Phi x2 sigma3/2) C_H,  C2(x) = exp(+i Phi x1 sigma3/2) C_H.
CoinPair quasiperiodic_coins(Flux f);

/// One-step walk operator on Z^2, applied matrix-free on finite boxes.
///
/// Application to a StateVector truncates rawly: amplitudes shifted off the
/// box are dropped, so the truncation is not unitary near the box edge. All
/// spectral work goes through the Bloch fibers or the decoupled restriction.
class Walk2D {
 public:
  /// Magnetic walk diag(T1,T1*) C_H diag(T2,T2*) C_H composed from magnetic
  /// translations; valid in every gauge.
  static Walk2D magnetic(const GaugeField& g);

  /// The same walk composed from plain conditional shifts and the gauge's
  /// position-dependent coins (symmetric and landau gauges only).
  static Walk2D magnetic_coin_form(const GaugeField& g);

  /// Generic walk S1 C1 S2 C2 with caller-supplied coins.
  static Walk2D from_coins(CoinPair coins);

  /// Decoupled walk W_d: sigma1 coins on the wall around Lambda_L inserted
  /// between the spin-up and spin-down half-shifts. Transformed gauges are
  /// handled by conjugating the base-gauge W_d with the site phases G.
  static Walk2D decoupled(const GaugeField& g, int L);
  static Walk2D decoupled_from_coins(CoinPair coins, int L);

  WalkKind kind() const;
  const std::optional<GaugeField>& gauge() const { return gauge_; }
  std::optional<int> wall_halfwidth() const { return wall_L_; }
  bool has_coins() const { return static_cast<bool>(coins_.c1); }
  const CoinPair& coins() const;

  /// One step on psi's box; cost linear in the box size.
  StateVector apply(const StateVector& psi) const;

  /// Dense matrix of the box-truncated operator; throws when the dimension
  /// exceeds dim_cap.
  Eigen::MatrixXcd matrix(const Box& box, int dim_cap = 8192) const;

  Eigen::SparseMatrix<cplx> sparse_matrix(const Box& box) const;

  /// Exact full-space <x,s|W^t|x,s>, computed on a window of half-width t+1
  /// centered at x (lossless by the strict one-step propagation speed).
  cplx diagonal_element(int t, Site x, int spin) const;

  /// Exact full-space 2x2 block <k,.|W^t|l,.>, windowed around l.
  Eigen::Matrix2cd block_element(int t, Site k, Site l) const;

 private:
  enum class Recipe { magnetic_shifts, coin_shifts, coin_shifts_decoupled, conjugated_decoupled };

  Walk2D(Recipe r) : recipe_(r) {}

  Recipe recipe_;
  std::optional<GaugeField> gauge_;
  CoinPair coins_;
  std::optional<int> wall_L_;
};

}  // namespace magwalk

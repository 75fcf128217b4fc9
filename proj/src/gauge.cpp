#include "magwalk/gauge.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "magwalk/angles.hpp"

namespace magwalk {

const char* to_string(GaugeKind k) {
  switch (k) {
    case GaugeKind::symmetric:
      return "symmetric";
    case GaugeKind::landau:
      return "landau";
    default:
      return "transformed";
  }
}

GaugeKind gauge_kind_from_string(const std::string& s) {
  if (s == "symmetric") return GaugeKind::symmetric;
  if (s == "landau") return GaugeKind::landau;
  if (s == "transformed") return GaugeKind::transformed;
  throw std::invalid_argument("unknown gauge kind: " + s);
}

GaugeField GaugeField::symmetric(Flux f) { return GaugeField(GaugeKind::symmetric, f); }

GaugeField GaugeField::landau(Flux f) { return GaugeField(GaugeKind::landau, f); }

GaugeField GaugeField::transformed(const GaugeField& base, std::function<cplx(Site)> g) {
  if (base.kind_ == GaugeKind::transformed) throw std::invalid_argument("GaugeField::transformed: base must not itself be transformed");
  if (!g) throw std::invalid_argument("GaugeField::transformed: missing transform");
  GaugeField out(GaugeKind::transformed, base.flux_);
  out.base_kind_ = base.kind_;
  out.transform_ = std::move(g);
  return out;
}

cplx GaugeField::base_phase(Site x, int alpha) const {
  const double phi = flux_.value();
  const GaugeKind k = kind_ == GaugeKind::transformed ? base_kind_ : kind_;
  if (k == GaugeKind::symmetric) return alpha == 1 ? std::polar(1.0, -x.x2 * phi / 2.0) : std::polar(1.0, x.x1 * phi / 2.0);
  return alpha == 1 ? std::polar(1.0, -x.x2 * phi) : cplx(1.0, 0.0);
}

cplx GaugeField::phase(Site x, int alpha) const {
  if (alpha != 1 && alpha != 2) throw std::invalid_argument("GaugeField::phase: direction must be 1 or 2");
  const cplx u = base_phase(x, alpha);
  if (kind_ != GaugeKind::transformed) return u;
  const Site y = alpha == 1 ? x.shifted(1, 0) : x.shifted(0, 1);
  return transform_(y) * u * std::conj(transform_(x));
}

double GaugeField::plaquette(Site x) const {
  const cplx c = std::conj(phase(x, 1)) * std::conj(phase(x.shifted(1, 0), 2)) * phase(x.shifted(0, 1), 1) * phase(x, 2);
  return wrap_angle(-std::arg(c));
}

cplx GaugeField::site_transform(Site x) const { return kind_ == GaugeKind::transformed ? transform_(x) : cplx(1.0, 0.0); }

Coin GaugeField::coin1(Site x) const {
  if (!has_coin_form()) throw std::logic_error("GaugeField::coin1: transformed gauges have no coin form");
  const cplx u = base_phase(x, 1);
  Coin c = hadamard_coin();
  c.row(0) *= u;
  c.row(1) *= std::conj(u);
  return c;
}

Coin GaugeField::coin2(Site x) const {
  if (!has_coin_form()) throw std::logic_error("GaugeField::coin2: transformed gauges have no coin form");
  const cplx u = base_phase(x, 2);
  Coin c = hadamard_coin();
  c.row(0) *= u;
  c.row(1) *= std::conj(u);
  return c;
}

std::function<cplx(Site)> random_site_phases(std::uint64_t seed) {
  return [seed](Site x) {
    // splitmix64 over the packed coordinates
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x.x1)) << 32 | static_cast<std::uint32_t>(x.x2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    const double angle = two_pi * static_cast<double>(z >> 11) / 9007199254740992.0;  // 2^53
    return std::polar(1.0, angle);
  };
}

}  // namespace magwalk

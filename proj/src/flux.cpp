#include "magwalk/flux.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "magwalk/angles.hpp"

namespace magwalk {

double Flux::value() const { return wrap_angle(two_pi * static_cast<double>(num) / static_cast<double>(den)); }

Flux Flux::negated() const { return reduce_flux((den - num) % den, den); }

Flux reduce_flux(std::int64_t p, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("reduce_flux: denominator must be positive");
  p %= q;
  if (p < 0) p += q;
  const std::int64_t g = std::gcd(p, q);
  return Flux{p / g, q / g};
}

ConvergentSequence golden_convergents(int n) {
  if (n < 1) throw std::invalid_argument("golden_convergents: n must be >= 1");
  ConvergentSequence seq;
  seq.target = (std::sqrt(5.0) - 1.0) / 2.0;
  std::int64_t a = 1, b = 2;  // Fibonacci pair
  for (int i = 0; i < n; ++i) {
    seq.convergents.push_back(reduce_flux(a, b));
    const std::int64_t c = a + b;
    a = b;
    b = c;
  }
  return seq;
}

ConvergentSequence convergents_of(double target, int n) {
  if (n < 1) throw std::invalid_argument("convergents_of: n must be >= 1");
  if (target < 0.0 || target >= 1.0) throw std::invalid_argument("convergents_of: target must lie in [0, 1)");
  ConvergentSequence seq;
  seq.target = target;
  // p_k = a_k p_{k-1} + p_{k-2}, same for q.
  std::int64_t p_prev = 1, q_prev = 0;  // p_{-1}/q_{-1}
  std::int64_t p_cur = 0, q_cur = 1;    // a_0 = floor(target) = 0
  double x = target;
  while (static_cast<int>(seq.convergents.size()) < n) {
    const double frac = x - std::floor(x);
    if (frac < 1e-12 || q_cur > (std::int64_t{1} << 40)) break;  // target is (numerically) rational
    x = 1.0 / frac;
    const auto a = static_cast<std::int64_t>(std::floor(x));
    const std::int64_t p_next = a * p_cur + p_prev;
    const std::int64_t q_next = a * q_cur + q_prev;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    if (p_cur % q_cur != 0) seq.convergents.push_back(reduce_flux(p_cur, q_cur));
  }
  return seq;
}

std::vector<Flux> reduced_fluxes_up_to(std::int64_t q_max) {
  if (q_max < 1) throw std::invalid_argument("reduced_fluxes_up_to: q_max must be >= 1");
  std::vector<Flux> out;
  out.push_back(Flux{0, 1});
  for (std::int64_t q = 2; q <= q_max; ++q)
    for (std::int64_t p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) out.push_back(Flux{p, q});
  return out;
}

}  // namespace magwalk

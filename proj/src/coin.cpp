#include "magwalk/coin.hpp"

#include <cmath>
#include <stdexcept>

namespace magwalk {

Coin hadamard_coin() {
  const double s = 1.0 / std::sqrt(2.0);
  Coin c;
  c << s, s, s, -s;
  return c;
}

Coin pauli(int axis) {
  Coin c;
  switch (axis) {
    case 1:
      c << 0, 1, 1, 0;
      break;
    case 2:
      c << 0, cplx(0, -1), cplx(0, 1), 0;
      break;
    case 3:
      c << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("pauli: axis must be 1, 2 or 3");
  }
  return c;
}

Coin axis_rotation_coin(int axis, double angle) {
  return std::cos(angle) * Coin::Identity() + cplx(0, std::sin(angle)) * pauli(axis);
}

double unitarity_defect(const Coin& c) { return (c.adjoint() * c - Coin::Identity()).cwiseAbs().maxCoeff(); }

bool is_unitary(const Coin& c, double tol) { return unitarity_defect(c) <= tol; }

CoinClass classify_coin(const Coin& c, double tol) {
  if (!is_unitary(c, tol)) throw std::invalid_argument("classify_coin: coin is not unitary");
  if (std::abs(c(0, 1)) <= tol && std::abs(c(1, 0)) <= tol) return CoinClass::diagonal;
  if (std::abs(c(0, 0)) <= tol && std::abs(c(1, 1)) <= tol) return CoinClass::off_diagonal;
  return CoinClass::generic;
}

const char* to_string(CoinClass c) {
  switch (c) {
    case CoinClass::diagonal:
      return "diagonal";
    case CoinClass::off_diagonal:
      return "off_diagonal";
    default:
      return "generic";
  }
}

}  // namespace magwalk

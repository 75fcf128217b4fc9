#pragma once

#include <Eigen/Core>
#include <complex>

namespace magwalk {

using cplx = std::complex<double>;
using Coin = Eigen::Matrix2cd;

/// The Hadamard coin (1/sqrt(2)) [[1, 1], [1, -1]].
Coin hadamard_coin();

/// Pauli matrix sigma_axis, axis in {1, 2, 3}.
Coin pauli(int axis);

/// exp(i * angle * sigma_axis).
Coin axis_rotation_coin(int axis, double angle);

enum class CoinClass { diagonal, off_diagonal, generic };

/// Max-entry deviation of C*C from the identity.
double unitarity_defect(const Coin& c);

bool is_unitary(const Coin& c, double tol = 1e-12);

/// Classify a unitary coin; throws std::invalid_argument on non-unitary input.
CoinClass classify_coin(const Coin& c, double tol = 1e-12);

const char* to_string(CoinClass c);

}  // namespace magwalk

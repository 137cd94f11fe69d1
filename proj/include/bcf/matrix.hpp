#pragma once

#include <array>
#include <string>

#include "bcf/rational.hpp"

namespace bcf {

/// Row-major 3x3 integer matrix.
using Matrix3 = std::array<std::array<Integer, 3>, 3>;

Matrix3 identity3();
Matrix3 operator*(const Matrix3& x, const Matrix3& y);
Matrix3 transpose(const Matrix3& m);
Integer det(const Matrix3& m);

/// R = [[a, b, 1], [1, 0, 0], [0, 1, 0]]; det R = 1.
Matrix3 transfer_matrix(const Integer& a, const Integer& b);
/// R^{-1} = [[0, 1, 0], [0, 0, 1], [1, -a, -b]].
Matrix3 inverse_transfer_matrix(const Integer& a, const Integer& b);

std::string to_string(const Matrix3& m);

}  // namespace bcf

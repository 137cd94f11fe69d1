#include "bcf/matrix.hpp"

namespace bcf {

Matrix3 identity3() {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = (i == j) ? 1 : 0;
  return m;
}

Matrix3 operator*(const Matrix3& x, const Matrix3& y) {
  Matrix3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Integer acc(0);
      for (int k = 0; k < 3; ++k) acc += x[i][k] * y[k][j];
      out[i][j] = std::move(acc);
    }
  }
  return out;
}

Matrix3 transpose(const Matrix3& m) {
  Matrix3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = m[j][i];
  return out;
}

Integer det(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 transfer_matrix(const Integer& a, const Integer& b) {
  Matrix3 m = {{{a, b, Integer(1)}, {Integer(1), Integer(0), Integer(0)}, {Integer(0), Integer(1), Integer(0)}}};
  return m;
}

Matrix3 inverse_transfer_matrix(const Integer& a, const Integer& b) {
  Matrix3 m = {{{Integer(0), Integer(1), Integer(0)}, {Integer(0), Integer(0), Integer(1)}, {Integer(1), -a, -b}}};
  return m;
}

std::string to_string(const Matrix3& m) {
  std::string out = "[";
  for (int i = 0; i < 3; ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < 3; ++j) out += (j ? ", " : "") + m[i][j].get_str();
    out += "]";
  }
  return out + "]";
}

}  // namespace bcf

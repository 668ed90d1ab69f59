#pragma once

#include <array>

namespace zeno {

using Matrix3 = std::array<std::array<double, 3>, 3>;

constexpr double det3(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Cramer's rule. Caller checks det3(a) != 0 beforehand and passes it in.
constexpr std::array<double, 3> cramer_solve(const Matrix3& a, const std::array<double, 3>& b,
                                             double det) {
  std::array<double, 3> x{};
  for (int col = 0; col < 3; ++col) {
    Matrix3 ac = a;
    for (int row = 0; row < 3; ++row) ac[row][col] = b[row];
    x[col] = det3(ac) / det;
  }
  return x;
}

}  // namespace zeno

#pragma once

#include <array>
#include <cmath>

namespace cqroots {

using Mat8 = std::array<std::array<double, 8>, 8>;

/// Solve M x = rhs in place (Gaussian elimination, partial pivoting).
/// Returns false when M is numerically singular; rhs then holds garbage.
inline bool solve8(Mat8& M, std::array<double, 8>& rhs) {
  for (size_t col = 0; col < 8; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < 8; ++r)
      if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
    if (std::abs(M[piv][col]) < 1e-13) return false;
    if (piv != col) {
      std::swap(M[piv], M[col]);
      std::swap(rhs[piv], rhs[col]);
    }
    for (size_t r = col + 1; r < 8; ++r) {
      const double f = M[r][col] / M[col][col];
      if (f == 0.0) continue;
      for (size_t k = col; k < 8; ++k) M[r][k] -= f * M[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  for (size_t col = 8; col-- > 0;) {
    double x = rhs[col];
    for (size_t k = col + 1; k < 8; ++k) x -= M[col][k] * rhs[k];
    rhs[col] = x / M[col][col];
  }
  return true;
}

}  // namespace cqroots

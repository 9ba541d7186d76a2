#pragma once

// Small fixed-size dense linear algebra. Sizes here never exceed 5, so
// everything is a std::array and lives on the stack.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

#include "ryb/error.hpp"
#include "ryb/types.hpp"

namespace ryb::linalg {

template <std::size_t N>
using Matrix = std::array<std::array<double, N>, N>;

template <std::size_t N>
using Vector = std::array<double, N>;

/// Rule of Sarrus.
inline double det3(const Mat3& m) noexcept {
  return m[0][0] * m[1][1] * m[2][2] + m[0][1] * m[1][2] * m[2][0] + m[0][2] * m[1][0] * m[2][1] -
         m[0][2] * m[1][1] * m[2][0] - m[0][0] * m[1][2] * m[2][1] - m[0][1] * m[1][0] * m[2][2];
}

/// LU factorisation with partial (row) pivoting, PA = LU packed in place.
template <std::size_t N>
class PivotedLu {
 public:
  explicit PivotedLu(Matrix<N> a) : lu_(std::move(a)) {
    for (std::size_t i = 0; i < N; ++i) perm_[i] = i;
    for (std::size_t k = 0; k < N; ++k) {
      std::size_t pivot = k;
      for (std::size_t r = k + 1; r < N; ++r) {
        if (std::abs(lu_[r][k]) > std::abs(lu_[pivot][k])) pivot = r;
      }
      if (lu_[pivot][k] == 0.0) {
        singular_ = true;
        continue;
      }
      if (pivot != k) {
        std::swap(lu_[pivot], lu_[k]);
        std::swap(perm_[pivot], perm_[k]);
        parity_ = -parity_;
      }
      for (std::size_t r = k + 1; r < N; ++r) {
        const double f = lu_[r][k] / lu_[k][k];
        lu_[r][k] = f;
        for (std::size_t c = k + 1; c < N; ++c) lu_[r][c] -= f * lu_[k][c];
      }
    }
  }

  bool singular() const noexcept { return singular_; }

  double determinant() const noexcept {
    if (singular_) return 0.0;
    double d = parity_;
    for (std::size_t i = 0; i < N; ++i) d *= lu_[i][i];
    return d;
  }

  Vector<N> solve(const Vector<N>& b) const {
    if (singular_) throw Error(ErrorCode::SingularSystem, "coefficient matrix is singular");
    Vector<N> x{};
    for (std::size_t i = 0; i < N; ++i) {
      double s = b[perm_[i]];
      for (std::size_t c = 0; c < i; ++c) s -= lu_[i][c] * x[c];
      x[i] = s;
    }
    for (std::size_t i = N; i-- > 0;) {
      double s = x[i];
      for (std::size_t c = i + 1; c < N; ++c) s -= lu_[i][c] * x[c];
      x[i] = s / lu_[i][i];
    }
    return x;
  }

 private:
  Matrix<N> lu_;
  std::array<std::size_t, N> perm_{};
  double parity_ = 1.0;
  bool singular_ = false;
};

template <std::size_t N>
double determinant(const Matrix<N>& a) {
  return PivotedLu<N>(a).determinant();
}

template <std::size_t N>
Vector<N> multiply(const Matrix<N>& a, const Vector<N>& x) noexcept {
  Vector<N> y{};
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) y[r] += a[r][c] * x[c];
  }
  return y;
}

/// |a - b| measured against max(|a|, |b|, scale). `scale` lets callers
/// supply the magnitude of the summands so values that cancel to near zero
/// are not judged by a vanishing denominator.
inline double relative_gap(double a, double b, double scale = 0.0) noexcept {
  const double denom = std::max({std::abs(a), std::abs(b), std::abs(scale)});
  if (denom == 0.0) return 0.0;
  return std::abs(a - b) / denom;
}

}  // namespace ryb::linalg

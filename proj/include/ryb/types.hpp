#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace ryb {

// Factor order is fixed as (T, K, L) = (land, capital, labor). The same
// order gives the 1-based indices used in (-1)^(i+j) cofactor signs.
enum class Factor : std::size_t { T = 0, K = 1, L = 2 };

inline constexpr std::array<Factor, 3> kFactors{Factor::T, Factor::K, Factor::L};

constexpr std::size_t idx(Factor f) noexcept { return static_cast<std::size_t>(f); }

constexpr char factor_symbol(Factor f) noexcept {
  constexpr std::array<char, 3> symbols{'T', 'K', 'L'};
  return symbols[idx(f)];
}

inline constexpr std::size_t kSector1 = 0;
inline constexpr std::size_t kSector2 = 1;

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;
/// Rows are sectors (or goods), columns are factors in (T, K, L) order.
using Mat2x3 = std::array<Vec3, 2>;
/// Rows are factors, columns are sectors.
using Mat3x2 = std::array<std::array<double, 2>, 3>;

enum class Sign : int { Neg = -1, Zero = 0, Pos = 1 };

constexpr Sign sign_of(double v, double zero_tol = 0.0) noexcept {
  if (v > zero_tol) return Sign::Pos;
  if (v < -zero_tol) return Sign::Neg;
  return Sign::Zero;
}

constexpr char sign_char(Sign s) noexcept {
  switch (s) {
    case Sign::Pos: return '+';
    case Sign::Neg: return '-';
    case Sign::Zero: return '0';
  }
  return '?';
}

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

constexpr Sign operator-(Sign a) noexcept { return static_cast<Sign>(-static_cast<int>(a)); }

}  // namespace ryb

#pragma once

// Share structure of a three-factor (T, K, L), two-good economy.

#include <cstdint>
#include <random>
#include <string>

#include "ryb/types.hpp"

namespace ryb {

inline constexpr double kShareSumTol = 1e-12;

/// Distributive shares theta_ij, sector income shares theta_j and every
/// quantity derived from them. Immutable once built.
class ShareTable {
 public:
  /// Validates shares and fills the derived fields.
  /// Throws Error{OutOfRangeShare} or Error{NonStochasticColumns}.
  static ShareTable build(const Mat3x2& theta, const std::array<double, 2>& theta_sector);

  double theta(Factor i, std::size_t j) const noexcept { return theta_[idx(i)][j]; }
  double sector_share(std::size_t j) const noexcept { return theta_sector_[j]; }
  double factor_share(Factor i) const noexcept { return theta_factor_[idx(i)]; }
  double lambda(Factor i, std::size_t j) const noexcept { return lambda_[idx(i)][j]; }

  /// Inter-sector differences theta_i1 - theta_i2, written (A, B, E) for
  /// land, capital and labor respectively.
  double land_diff() const noexcept { return diff_[0]; }
  double capital_diff() const noexcept { return diff_[1]; }
  double labor_diff() const noexcept { return diff_[2]; }

  /// theta_L / theta_K: the scale of the ratio-vector boundary.
  double labor_capital_ratio() const noexcept {
    return factor_share(Factor::L) / factor_share(Factor::K);
  }

  const Mat3x2& theta() const noexcept { return theta_; }
  const std::array<double, 2>& sector_shares() const noexcept { return theta_sector_; }
  const Vec3& factor_shares() const noexcept { return theta_factor_; }
  const Mat3x2& lambda() const noexcept { return lambda_; }

 private:
  ShareTable() = default;

  Mat3x2 theta_{};
  std::array<double, 2> theta_sector_{};
  Vec3 theta_factor_{};
  Mat3x2 lambda_{};
  Vec3 diff_{};
};

inline ShareTable build_share_table(const Mat3x2& theta, const std::array<double, 2>& theta_sector) {
  return ShareTable::build(theta, theta_sector);
}

struct RankingReport {
  double land_ratio = 0;     // theta_T1 / theta_T2
  double labor_ratio = 0;    // theta_L1 / theta_L2
  double capital_ratio = 0;  // theta_K1 / theta_K2
  /// theta_T1/theta_T2 > theta_L1/theta_L2 > theta_K1/theta_K2, strict.
  bool intensity_ranking = false;
  /// theta_L1 > theta_L2, strict.
  bool middle_factor_ranking = false;
  /// (A, B, E) = (+, -, +); only certified when both rankings pass.
  bool diff_signs_certified = false;

  bool ok() const noexcept { return intensity_ranking && middle_factor_ranking; }
  std::string describe_failure() const;
};

RankingReport check_intensity_ranking(const ShareTable& table);

/// Throws Error{RankingViolated} naming the failed condition.
void require_ranking(const ShareTable& table);

/// Draws a share table with every share at least `min_share` that satisfies
/// both ranking conditions. Used by sweeps and property tests.
ShareTable sample_share_table(std::mt19937_64& rng, double min_share = 0.03);

}  // namespace ryb

#include "ryb/equilibrium_data.hpp"

#include <cmath>
#include <sstream>

#include "ryb/error.hpp"

namespace ryb {

ShareTable ShareTable::build(const Mat3x2& theta, const std::array<double, 2>& theta_sector) {
  auto in_open_unit = [](double v) { return std::isfinite(v) && v > 0.0 && v < 1.0; };

  for (Factor i : kFactors) {
    for (std::size_t j = 0; j < 2; ++j) {
      if (!in_open_unit(theta[idx(i)][j])) {
        std::ostringstream os;
        os << "theta_" << factor_symbol(i) << (j + 1) << " = " << theta[idx(i)][j]
           << " is outside (0,1)";
        throw Error(ErrorCode::OutOfRangeShare, os.str());
      }
    }
  }
  for (std::size_t j = 0; j < 2; ++j) {
    if (!in_open_unit(theta_sector[j])) {
      std::ostringstream os;
      os << "theta_" << (j + 1) << " = " << theta_sector[j] << " is outside (0,1)";
      throw Error(ErrorCode::OutOfRangeShare, os.str());
    }
  }
  for (std::size_t j = 0; j < 2; ++j) {
    const double sum = theta[0][j] + theta[1][j] + theta[2][j];
    if (std::abs(sum - 1.0) > kShareSumTol) {
      std::ostringstream os;
      os.precision(15);
      os << "distributive shares of sector " << (j + 1) << " sum to " << sum;
      throw Error(ErrorCode::NonStochasticColumns, os.str());
    }
  }
  if (std::abs(theta_sector[0] + theta_sector[1] - 1.0) > kShareSumTol) {
    std::ostringstream os;
    os.precision(15);
    os << "sector income shares sum to " << theta_sector[0] + theta_sector[1];
    throw Error(ErrorCode::NonStochasticColumns, os.str());
  }

  ShareTable t;
  t.theta_ = theta;
  t.theta_sector_ = theta_sector;
  for (std::size_t i = 0; i < 3; ++i) {
    t.theta_factor_[i] = theta_sector[0] * theta[i][0] + theta_sector[1] * theta[i][1];
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      t.lambda_[i][j] = theta_sector[j] / t.theta_factor_[i] * theta[i][j];
    }
    t.diff_[i] = theta[i][0] - theta[i][1];
  }
  return t;
}

std::string RankingReport::describe_failure() const {
  std::ostringstream os;
  if (!intensity_ranking) {
    os << "factor-intensity ranking violated: need theta_T1/theta_T2 > theta_L1/theta_L2 > "
          "theta_K1/theta_K2, got "
       << land_ratio << ", " << labor_ratio << ", " << capital_ratio;
  }
  if (!middle_factor_ranking) {
    if (!intensity_ranking) os << "; ";
    os << "middle-factor ranking violated: need theta_L1 > theta_L2 (labor used relatively "
          "intensively in sector 1), got theta_L1/theta_L2 = "
       << labor_ratio;
  }
  return os.str();
}

RankingReport check_intensity_ranking(const ShareTable& table) {
  RankingReport r;
  r.land_ratio = table.theta(Factor::T, kSector1) / table.theta(Factor::T, kSector2);
  r.labor_ratio = table.theta(Factor::L, kSector1) / table.theta(Factor::L, kSector2);
  r.capital_ratio = table.theta(Factor::K, kSector1) / table.theta(Factor::K, kSector2);
  r.intensity_ranking = r.land_ratio > r.labor_ratio && r.labor_ratio > r.capital_ratio;
  r.middle_factor_ranking = table.theta(Factor::L, kSector1) > table.theta(Factor::L, kSector2);
  r.diff_signs_certified = r.ok() && table.land_diff() > 0.0 && table.capital_diff() < 0.0 &&
                           table.labor_diff() > 0.0;
  return r;
}

void require_ranking(const ShareTable& table) {
  const RankingReport r = check_intensity_ranking(table);
  if (!r.ok()) throw Error(ErrorCode::RankingViolated, r.describe_failure());
}

namespace {

// Uniform point on the 3-simplex, rejected until every share is >= min_share.
std::array<double, 3> simplex_point(std::mt19937_64& rng, double min_share) {
  std::exponential_distribution<double> expo(1.0);
  for (;;) {
    std::array<double, 3> x{expo(rng), expo(rng), expo(rng)};
    const double s = x[0] + x[1] + x[2];
    for (double& v : x) v /= s;
    if (x[0] >= min_share && x[1] >= min_share && x[2] >= min_share) {
      // Close the column exactly so the stochastic check sees 1 to rounding.
      x[2] = 1.0 - x[0] - x[1];
      return x;
    }
  }
}

}  // namespace

ShareTable sample_share_table(std::mt19937_64& rng, double min_share) {
  std::uniform_real_distribution<double> sector(0.1, 0.9);
  for (;;) {
    const auto c1 = simplex_point(rng, min_share);
    const auto c2 = simplex_point(rng, min_share);
    Mat3x2 theta{};
    for (std::size_t i = 0; i < 3; ++i) {
      theta[i][0] = c1[i];
      theta[i][1] = c2[i];
    }
    const double t1 = sector(rng);
    ShareTable table = ShareTable::build(theta, {t1, 1.0 - t1});
    if (check_intensity_ranking(table).ok()) return table;
  }
}

}  // namespace ryb

#pragma once

// Random instance generation shared by the unit and acceptance tests.

#include <cstdint>
#include <optional>
#include <random>

#include "ryb/equilibrium_data.hpp"
#include "ryb/error.hpp"
#include "ryb/geometry.hpp"
#include "ryb/substitution.hpp"

namespace ryb::testing {

inline const Mat3x2 kReferenceTheta{{{0.50, 0.20}, {0.15, 0.50}, {0.35, 0.30}}};
inline const std::array<double, 2> kReferenceSector{0.6, 0.4};

inline ShareTable reference_table() { return build_share_table(kReferenceTheta, kReferenceSector); }

struct Instance {
  ShareTable table;
  AesTensor aes;
  EwsMatrix g;
};

inline Instance make_instance(std::mt19937_64& rng, const AesSamplingOptions& opts = {}) {
  ShareTable table = sample_share_table(rng);
  AesTensor aes = sample_valid_aes(table, rng(), opts);
  EwsMatrix g = ews_from_epsilon(epsilon_from_aes(aes, table), table);
  return {table, aes, g};
}

/// Builds g for a ratio-plane point (S', U') on the given side of T.
/// Returns nothing when the point is outside the admissible region.
inline std::optional<EwsMatrix> place(const ShareTable& table, double s_prime, double u_prime, Sign sign_t,
                                      double t_magnitude = 1.0) {
  const double t = sign_t == Sign::Pos ? t_magnitude : -t_magnitude;
  const EwsRatioVector v{s_prime, u_prime, sign_t};
  if (!is_feasible(v, table.labor_capital_ratio())) return std::nullopt;
  try {
    return ews_from_ratio_triple(table, s_prime * t, t, u_prime * t);
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace ryb::testing

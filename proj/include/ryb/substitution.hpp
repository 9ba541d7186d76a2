#pragma once

// Allen elasticities, price elasticities of input demand and economy-wide
// substitution (EWS) terms.

#include <cstdint>
#include <string>

#include "ryb/equilibrium_data.hpp"
#include "ryb/types.hpp"

namespace ryb {

inline constexpr double kIdentityTol = 1e-10;
inline constexpr double kDegenerateTTol = 1e-12;
/// Strict quasi-concavity: the leading 2x2 minor of each sector's
/// substitution matrix must exceed this value.
inline constexpr double kNsdMinorTol = 1e-12;

/// sigma[j][i][h]: Allen partial elasticity between factors i and h in
/// sector j (0-based, factors in T, K, L order).
struct AesTensor {
  std::array<Mat3, 2> sigma{};

  double operator()(std::size_t j, Factor i, Factor h) const noexcept {
    return sigma[j][idx(i)][idx(h)];
  }
};

/// The three free cross elasticities of one sector.
struct CrossElasticities {
  double tk = 1.0;
  double tl = 1.0;
  double kl = 1.0;
};

/// Fills the symmetric off-diagonals from `cross` and closes each diagonal
/// with the zero-degree homogeneity condition sum_h theta_hj sigma_ih = 0.
AesTensor complete_aes(const std::array<CrossElasticities, 2>& cross, const ShareTable& table);

/// Unit cross elasticities in both sectors.
AesTensor cobb_douglas_aes(const ShareTable& table);

struct ValidityReport {
  bool symmetric = false;
  bool own_negative = false;
  bool homogeneous = false;
  bool nsd_row_sums = false;
  bool nsd_diagonal = false;
  bool nsd_minor = false;

  bool ok() const noexcept {
    return symmetric && own_negative && homogeneous && nsd_row_sums && nsd_diagonal && nsd_minor;
  }
  std::string describe_failure() const;
};

ValidityReport validate_aes(const AesTensor& aes, const ShareTable& table);

/// eps[j][i][h] = d log a_ij / d log w_h = theta_hj sigma^{ij}_h.
struct EpsilonTensor {
  std::array<Mat3, 2> eps{};
};

/// Throws Error{InvalidAes} if `aes` fails validate_aes.
EpsilonTensor epsilon_from_aes(const AesTensor& aes, const ShareTable& table);

/// g[i][h] = sum_j lambda_ij eps^{ij}_h.
struct EwsMatrix {
  Mat3 g{};

  double operator()(Factor i, Factor h) const noexcept { return g[idx(i)][idx(h)]; }
};

EwsMatrix ews_from_epsilon(const EpsilonTensor& eps, const ShareTable& table);

/// Rebuilds the full EWS matrix from (S, T, U) = (g_LK, g_LT, g_KT) using
/// zero row sums and theta_i g_ih = theta_h g_hi. Throws Error{InvalidEws}
/// when the result violates g_ii < 0 or g_KK g_TT - g_TK g_KT > 0.
EwsMatrix ews_from_ratio_triple(const ShareTable& table, double s, double t, double u);

struct EwsIdentityReport {
  double max_row_sum = 0;             // max_i |sum_h g_ih|
  double max_reciprocity_gap = 0;     // max |g_ih theta_i - g_hi theta_h|
  bool diagonal_negative = false;     // g_ii < 0
  bool cross_sums_positive = false;   // g_KT+g_KL, g_TK+g_TL, g_LK+g_LT > 0
  int negative_cross_terms = 0;       // among g_LK, g_LT, g_KT
  double minor = 0;                   // g_KK g_TT - g_TK g_KT

  bool ok() const noexcept {
    return max_row_sum <= kIdentityTol && max_reciprocity_gap <= kIdentityTol && diagonal_negative &&
           cross_sums_positive && negative_cross_terms <= 1 && minor > 0.0;
  }
};

EwsIdentityReport check_ews_identities(const EwsMatrix& g, const ShareTable& table);

enum class Quadrant { I, II, III, IV, Axis };

std::string_view to_string(Quadrant q) noexcept;

/// (S', U') = (g_LK / g_LT, g_KT / g_LT) and the sign of T = g_LT.
struct EwsRatioVector {
  double s_prime = 0;
  double u_prime = 0;
  Sign sign_t = Sign::Pos;

  Quadrant quadrant() const noexcept;
};

/// Throws Error{DegenerateT} when |g_LT| <= 1e-12.
EwsRatioVector ews_ratio_vector(const EwsMatrix& g);

struct AesSamplingOptions {
  /// Range for each cross elasticity, indexed [sector][pair] with pairs in
  /// (TK, TL, KL) order.
  std::array<std::array<std::array<double, 2>, 3>, 2> range{{
      {{{-3.0, 3.0}, {-3.0, 3.0}, {-3.0, 3.0}}},
      {{{-3.0, 3.0}, {-3.0, 3.0}, {-3.0, 3.0}}},
  }};
  int max_attempts = 100000;

  static AesSamplingOptions uniform(double lo, double hi);
};

/// Rejection-samples cross elasticities until the completed tensor passes
/// validate_aes. Deterministic per seed. Throws Error{GenerationExhausted}.
AesTensor sample_valid_aes(const ShareTable& table, std::uint64_t seed,
                           const AesSamplingOptions& options = {});

/// Thompson's aggregate substitution terms s_ih = g_ih V_i / w_h.
/// Levels must be positive and consistent with the factor income shares
/// (w_i V_i proportional to theta_i), otherwise s is not symmetric.
/// Throws Error{NonPositiveLevels} or Error{InconsistentLevels}.
Mat3 aggregate_substitution(const EwsMatrix& g, const ShareTable& table, const Vec3& endowments,
                            const Vec3& prices);

}  // namespace ryb

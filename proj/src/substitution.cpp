#include "ryb/substitution.hpp"

#include <cmath>
#include <sstream>

#include "ryb/error.hpp"

namespace ryb {

namespace {

constexpr std::array<std::array<Factor, 2>, 3> kPairs{{
    {Factor::T, Factor::K},
    {Factor::T, Factor::L},
    {Factor::K, Factor::L},
}};

}  // namespace

AesTensor complete_aes(const std::array<CrossElasticities, 2>& cross, const ShareTable& table) {
  AesTensor aes;
  for (std::size_t j = 0; j < 2; ++j) {
    Mat3& s = aes.sigma[j];
    const std::array<double, 3> values{cross[j].tk, cross[j].tl, cross[j].kl};
    for (std::size_t p = 0; p < 3; ++p) {
      const auto a = idx(kPairs[p][0]);
      const auto b = idx(kPairs[p][1]);
      s[a][b] = values[p];
      s[b][a] = values[p];
    }
    for (Factor i : kFactors) {
      double off = 0.0;
      for (Factor h : kFactors) {
        if (h != i) off += table.theta(h, j) * s[idx(i)][idx(h)];
      }
      s[idx(i)][idx(i)] = -off / table.theta(i, j);
    }
  }
  return aes;
}

AesTensor cobb_douglas_aes(const ShareTable& table) { return complete_aes({}, table); }

std::string ValidityReport::describe_failure() const {
  std::ostringstream os;
  const char* sep = "";
  auto add = [&](bool ok, const char* what) {
    if (!ok) {
      os << sep << what;
      sep = "; ";
    }
  };
  add(symmetric, "AES not symmetric (sigma_ih != sigma_hi)");
  add(own_negative, "own elasticity not negative (sigma_ii >= 0)");
  add(homogeneous, "homogeneity violated (sum_h theta_hj sigma_ih != 0)");
  add(nsd_row_sums, "substitution matrix rows do not sum to zero");
  add(nsd_diagonal, "substitution matrix diagonal not negative");
  add(nsd_minor, "strict quasi-concavity violated (e_TT e_KK - e_TK^2 <= 0)");
  return os.str();
}

ValidityReport validate_aes(const AesTensor& aes, const ShareTable& table) {
  ValidityReport r{true, true, true, true, true, true};
  for (std::size_t j = 0; j < 2; ++j) {
    const Mat3& s = aes.sigma[j];
    for (const Vec3& row : s) {
      for (double v : row) {
        if (!std::isfinite(v)) return ValidityReport{};
      }
    }

    Mat3 e{};
    for (Factor i : kFactors) {
      double homog = 0.0;
      for (Factor h : kFactors) {
        const double sih = s[idx(i)][idx(h)];
        if (std::abs(sih - s[idx(h)][idx(i)]) > kIdentityTol) r.symmetric = false;
        homog += table.theta(h, j) * sih;
        e[idx(i)][idx(h)] = table.theta(i, j) * table.theta(h, j) * sih;
      }
      if (!(s[idx(i)][idx(i)] < 0.0)) r.own_negative = false;
      if (std::abs(homog) > kIdentityTol) r.homogeneous = false;
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (std::abs(e[i][0] + e[i][1] + e[i][2]) > kIdentityTol) r.nsd_row_sums = false;
      if (!(e[i][i] < 0.0)) r.nsd_diagonal = false;
    }
    const auto T = idx(Factor::T);
    const auto K = idx(Factor::K);
    if (!(e[T][T] * e[K][K] - e[T][K] * e[T][K] > kNsdMinorTol)) r.nsd_minor = false;
  }
  return r;
}

EpsilonTensor epsilon_from_aes(const AesTensor& aes, const ShareTable& table) {
  const ValidityReport v = validate_aes(aes, table);
  if (!v.ok()) throw Error(ErrorCode::InvalidAes, v.describe_failure());
  EpsilonTensor out;
  for (std::size_t j = 0; j < 2; ++j) {
    for (Factor i : kFactors) {
      for (Factor h : kFactors) {
        out.eps[j][idx(i)][idx(h)] = table.theta(h, j) * aes(j, i, h);
      }
    }
  }
  return out;
}

EwsMatrix ews_from_epsilon(const EpsilonTensor& eps, const ShareTable& table) {
  EwsMatrix g;
  for (Factor i : kFactors) {
    for (Factor h : kFactors) {
      double s = 0.0;
      for (std::size_t j = 0; j < 2; ++j) s += table.lambda(i, j) * eps.eps[j][idx(i)][idx(h)];
      g.g[idx(i)][idx(h)] = s;
    }
  }
  return g;
}

EwsMatrix ews_from_ratio_triple(const ShareTable& table, double s, double t, double u) {
  const double th_t = table.factor_share(Factor::T);
  const double th_k = table.factor_share(Factor::K);
  const double th_l = table.factor_share(Factor::L);
  const auto T = idx(Factor::T);
  const auto K = idx(Factor::K);
  const auto L = idx(Factor::L);

  EwsMatrix g;
  g.g[L][K] = s;
  g.g[L][T] = t;
  g.g[K][T] = u;
  g.g[L][L] = -(s + t);
  g.g[K][L] = th_l / th_k * s;
  g.g[K][K] = -(g.g[K][T] + g.g[K][L]);
  g.g[T][K] = th_k / th_t * u;
  g.g[T][L] = th_l / th_t * t;
  g.g[T][T] = -(g.g[T][K] + g.g[T][L]);

  const EwsIdentityReport r = check_ews_identities(g, table);
  if (!r.diagonal_negative || !(r.minor > 0.0)) {
    std::ostringstream os;
    os << "(S,T,U) = (" << s << ", " << t << ", " << u
       << ") violates negative own terms or the positive 2x2 minor";
    throw Error(ErrorCode::InvalidEws, os.str());
  }
  return g;
}

EwsIdentityReport check_ews_identities(const EwsMatrix& ews, const ShareTable& table) {
  const Mat3& g = ews.g;
  const auto T = idx(Factor::T);
  const auto K = idx(Factor::K);
  const auto L = idx(Factor::L);
  EwsIdentityReport r;
  r.diagonal_negative = true;
  for (std::size_t i = 0; i < 3; ++i) {
    r.max_row_sum = std::max(r.max_row_sum, std::abs(g[i][0] + g[i][1] + g[i][2]));
    if (!(g[i][i] < 0.0)) r.diagonal_negative = false;
    for (std::size_t h = 0; h < 3; ++h) {
      const double gap = g[i][h] * table.factor_shares()[i] - g[h][i] * table.factor_shares()[h];
      r.max_reciprocity_gap = std::max(r.max_reciprocity_gap, std::abs(gap));
    }
  }
  r.cross_sums_positive = g[K][T] + g[K][L] > 0.0 && g[T][K] + g[T][L] > 0.0 && g[L][K] + g[L][T] > 0.0;
  r.negative_cross_terms = (g[L][K] < 0.0) + (g[L][T] < 0.0) + (g[K][T] < 0.0);
  r.minor = g[K][K] * g[T][T] - g[T][K] * g[K][T];
  return r;
}

std::string_view to_string(Quadrant q) noexcept {
  switch (q) {
    case Quadrant::I: return "I";
    case Quadrant::II: return "II";
    case Quadrant::III: return "III";
    case Quadrant::IV: return "IV";
    case Quadrant::Axis: return "axis";
  }
  return "?";
}

Quadrant EwsRatioVector::quadrant() const noexcept {
  if (s_prime > 0.0 && u_prime > 0.0) return Quadrant::I;
  if (s_prime < 0.0 && u_prime > 0.0) return Quadrant::II;
  if (s_prime < 0.0 && u_prime < 0.0) return Quadrant::III;
  if (s_prime > 0.0 && u_prime < 0.0) return Quadrant::IV;
  return Quadrant::Axis;
}

EwsRatioVector ews_ratio_vector(const EwsMatrix& g) {
  const double t = g(Factor::L, Factor::T);
  if (!(std::abs(t) > kDegenerateTTol)) {
    std::ostringstream os;
    os << "g_LT = " << t << " is too close to zero for the ratio vector";
    throw Error(ErrorCode::DegenerateT, os.str());
  }
  EwsRatioVector v;
  v.s_prime = g(Factor::L, Factor::K) / t;
  v.u_prime = g(Factor::K, Factor::T) / t;
  v.sign_t = t > 0.0 ? Sign::Pos : Sign::Neg;
  return v;
}

AesSamplingOptions AesSamplingOptions::uniform(double lo, double hi) {
  AesSamplingOptions o;
  for (auto& sector : o.range) {
    for (auto& r : sector) r = {lo, hi};
  }
  return o;
}

AesTensor sample_valid_aes(const ShareTable& table, std::uint64_t seed,
                           const AesSamplingOptions& options) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng](const std::array<double, 2>& r) {
    return std::uniform_real_distribution<double>(r[0], r[1])(rng);
  };
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::array<CrossElasticities, 2> cross;
    for (std::size_t j = 0; j < 2; ++j) {
      cross[j].tk = draw(options.range[j][0]);
      cross[j].tl = draw(options.range[j][1]);
      cross[j].kl = draw(options.range[j][2]);
    }
    AesTensor aes = complete_aes(cross, table);
    if (validate_aes(aes, table).ok()) return aes;
  }
  throw Error(ErrorCode::GenerationExhausted,
              "no valid AES tensor after " + std::to_string(options.max_attempts) + " attempts");
}

Mat3 aggregate_substitution(const EwsMatrix& g, const ShareTable& table, const Vec3& endowments,
                            const Vec3& prices) {
  double income = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(endowments[i] > 0.0) || !(prices[i] > 0.0)) {
      throw Error(ErrorCode::NonPositiveLevels, "endowments and factor prices must be positive");
    }
    income += endowments[i] * prices[i];
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const double implied = endowments[i] * prices[i] / income;
    if (std::abs(implied - table.factor_shares()[i]) > kIdentityTol) {
      std::ostringstream os;
      os << "w_" << factor_symbol(kFactors[i]) << " V_" << factor_symbol(kFactors[i])
         << " / income = " << implied << " but theta_" << factor_symbol(kFactors[i]) << " = "
         << table.factor_shares()[i];
      throw Error(ErrorCode::InconsistentLevels, os.str());
    }
  }
  Mat3 s{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t h = 0; h < 3; ++h) s[i][h] = g.g[i][h] * endowments[i] / prices[h];
  }
  return s;
}

}  // namespace ryb

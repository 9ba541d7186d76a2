#pragma once

// End-to-end analysis of one economy: EWS, ratio vector, subregion, sign
// patterns from the lookup tables, and the dense-solve cross-check.

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ryb/equilibrium_data.hpp"
#include "ryb/geometry.hpp"
#include "ryb/scenario.hpp"
#include "ryb/statics.hpp"
#include "ryb/substitution.hpp"

namespace ryb {

struct ShockOutcome {
  ShockVector shock;
  ResponseVector response;
  double residual = 0;
  std::array<double, 2> cramer{};  // (X_1, X_2) from the cofactor expressions
  double cramer_gap = 0;           // max |cramer - dense| over both outputs
};

struct Report {
  std::string name;
  RankingReport ranking;
  ValidityReport aes_validity;
  EwsIdentityReport ews_identities;
  EwsMatrix g;
  EwsRatioVector ratio;
  Quadrant quadrant = Quadrant::Axis;
  Subregion region = Subregion::P1;
  bool strong = false;

  SignPattern rybczynski_lookup;
  SignPattern stolper_samuelson_lookup;
  SignPattern rybczynski_dense_signs;
  SignPattern stolper_samuelson_dense_signs;

  Mat2x3 rybczynski{};  // closed form
  Mat2x3 stolper_samuelson{};
  Mat2x3 rybczynski_dense_values{};
  Mat2x3 stolper_samuelson_dense_values{};

  DeltaReport delta;
  double cofactor_gap = 0;
  double rybczynski_gap = 0;        // max relative |closed - dense|
  double stolper_samuelson_gap = 0;
  double max_residual = 0;          // over unit shocks and scenario shocks
  std::vector<ShockOutcome> shocks;

  /// Lookup signs equal dense-solve signs and closed forms equal the dense
  /// values to 1e-9.
  bool oracle_agree = false;
};

/// Full pipeline on validated inputs. Propagates Error{DegenerateT},
/// Error{OnLine}, Error{Infeasible} and Error{ClosedFormMismatch}.
Report analyze(const ShareTable& table, const AesTensor& aes, std::span<const ShockVector> shocks = {},
               std::string name = {});

/// Same pipeline from an EWS matrix directly (no sector-level AES).
Report analyze_ews(const ShareTable& table, const EwsMatrix& g,
                   std::span<const ShockVector> shocks = {}, std::string name = {});

Report run_report(const Scenario& scenario);

nlohmann::json report_to_json(const Report& report);
std::string report_to_text(const Report& report);

}  // namespace ryb

#pragma once

// JSON scenario files.
//
//   {
//     "name": "reference",
//     "theta": {"T": [0.50, 0.20], "K": [0.15, 0.50], "L": [0.35, 0.30]},
//     "theta_sector": [0.6, 0.4],
//     "sigma": "cobb-douglas",
//     "shocks": [{"P": 0.01, "V": [0.0, 0.02, 0.0]}]
//   }
//
// "sigma" is either the preset "cobb-douglas", an object of cross
// elasticities per sector ({"1": {"TK": .., "TL": .., "KL": ..}, "2": ..};
// diagonals are closed by homogeneity), or full 3x3 matrices per sector
// ({"1": [[..], [..], [..]], "2": ..}, rows and columns in T, K, L order).

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ryb/equilibrium_data.hpp"
#include "ryb/statics.hpp"
#include "ryb/substitution.hpp"

namespace ryb {

inline constexpr std::string_view kCobbDouglasPreset = "cobb-douglas";

struct AesSpec {
  std::string preset;  // empty unless a preset was named
  std::optional<std::array<CrossElasticities, 2>> cross;
  std::optional<std::array<Mat3, 2>> full;

  /// Cross elasticities it implies (presets and full tensors included).
  std::array<CrossElasticities, 2> cross_elasticities() const;
};

struct Scenario {
  std::string name;
  Mat3x2 theta{};
  std::array<double, 2> theta_sector{};
  AesSpec aes_spec;
  std::vector<ShockVector> shocks;

  /// Throws the underlying share-table error.
  ShareTable table() const;
  AesTensor aes(const ShareTable& table) const;
};

/// Throws Error{ParseError} on malformed documents.
Scenario parse_scenario(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const Scenario& scenario);

/// Throws Error{ValidationError} naming the failed model condition.
void validate_scenario(const Scenario& scenario);

/// Reads, parses and validates. Throws Error{IoError}, Error{ParseError} or
/// Error{ValidationError}.
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace ryb

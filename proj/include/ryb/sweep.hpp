#pragma once

// Grid sweeps over the six cross elasticities, optionally across randomly
// sampled share tables, written as CSV.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ryb/geometry.hpp"
#include "ryb/scenario.hpp"
#include "ryb/statics.hpp"

namespace ryb {

/// Axis names in CSV order: s1_TK, s1_TL, s1_KL, s2_TK, s2_TL, s2_KL.
inline constexpr std::array<std::string_view, 6> kSweepAxes{"s1_TK", "s1_TL", "s1_KL",
                                                            "s2_TK", "s2_TL", "s2_KL"};

struct GridAxis {
  double lo = 0;
  double hi = 0;
  int n = 1;
  double value(int k) const noexcept { return n <= 1 ? lo : lo + (hi - lo) * k / (n - 1); }
};

/// Missing axes are null and take the template scenario's value.
using GridSpec = std::array<std::optional<GridAxis>, 6>;

/// "s1_TK=-2:2:9,s2_KL=0.5". Throws Error{ParseError}.
GridSpec parse_grid_spec(std::string_view text);

struct SweepOptions {
  /// When set, the template's share table is replaced by this many sampled
  /// tables, each swept over the full grid.
  std::optional<int> random_tables;
  std::uint64_t seed = 1;
};

enum class SweepStatus { Classified, RejectedAes, RejectedDegenerateT, RejectedOnLine };

std::string_view to_string(SweepStatus s) noexcept;

struct SweepRow {
  std::size_t row = 0;
  std::size_t table_index = 0;
  Mat3x2 theta{};
  double theta1 = 0;
  std::array<double, 6> sigma{};
  SweepStatus status = SweepStatus::RejectedAes;
  // Defined when status is Classified.
  EwsRatioVector ratio;
  Quadrant quadrant = Quadrant::Axis;
  Subregion region = Subregion::P1;
  bool strong = false;
  SignPattern rybczynski;
  SignPattern stolper_samuelson;
  bool oracle_agree = false;
};

struct SweepSummary {
  std::size_t total = 0;
  std::size_t classified = 0;
  std::size_t rejected = 0;
  std::size_t oracle_mismatches = 0;
};

std::vector<SweepRow> run_sweep(const Scenario& base, const GridSpec& grid, const SweepOptions& options = {});
SweepSummary summarize(const std::vector<SweepRow>& rows) noexcept;

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
/// Throws Error{IoError}.
void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows);

}  // namespace ryb

#pragma once

// SVG rendering of the EWS-ratio plane.

#include <filesystem>
#include <optional>
#include <string>

#include "ryb/equilibrium_data.hpp"
#include "ryb/scenario.hpp"
#include "ryb/substitution.hpp"

namespace ryb {

struct FigureWindow {
  double s_min = -4.0;
  double s_max = 4.0;
  double u_min = -10.0;
  double u_max = 4.0;
};

/// Boundary branches, both asymptotes, the six lines ij, Q and the six R_ij,
/// and the ratio vector when given. Points outside the window are omitted
/// and listed in the document's <desc>. Output is byte-for-byte
/// deterministic for fixed input.
std::string render_figure_svg(const ShareTable& table, const std::optional<EwsRatioVector>& vector,
                              const FigureWindow& window = {});

/// Throws Error{IoError} when `out` cannot be written.
void render_figure(const Scenario& scenario, const std::filesystem::path& out,
                   const FigureWindow& window = {});

}  // namespace ryb

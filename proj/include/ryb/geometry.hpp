#pragma once

// The EWS-ratio plane: boundary hyperbola, the six sign-change lines ij,
// their common point Q, the line/boundary intersections R_ij, and the
// classifier into the twelve subregions.

#include <array>
#include <optional>
#include <string_view>

#include "ryb/equilibrium_data.hpp"
#include "ryb/substitution.hpp"
#include "ryb/types.hpp"

namespace ryb {

inline constexpr double kOnLineTol = 1e-12;
inline constexpr double kPoleTol = 1e-12;

/// Line ij, indexed row-major like the 2x3 cofactor matrix:
/// index = sector * 3 + factor.
enum class Line : std::size_t { T1 = 0, K1, L1, T2, K2, L2 };

inline constexpr std::array<Line, 6> kLines{Line::T1, Line::K1, Line::L1,
                                            Line::T2, Line::K2, Line::L2};

constexpr std::size_t idx(Line l) noexcept { return static_cast<std::size_t>(l); }
constexpr Line line_of(Factor i, std::size_t sector) noexcept {
  return static_cast<Line>(sector * 3 + idx(i));
}
constexpr Factor line_factor(Line l) noexcept { return kFactors[idx(l) % 3]; }
constexpr std::size_t line_sector(Line l) noexcept { return idx(l) / 3; }

std::string_view to_string(Line l) noexcept;

/// f_ij(S') = (a S' + b) / e.
struct LineCoeff {
  double a = 0;
  double b = 0;
  double e = 1;

  double operator()(double s_prime) const noexcept { return (a * s_prime + b) / e; }
  double slope() const noexcept { return a / e; }
  double intercept() const noexcept { return b / e; }
};

struct LineCoeffs {
  std::array<LineCoeff, 6> lines{};
  double labor_capital_ratio = 0;  // theta_L / theta_K

  const LineCoeff& operator[](Line l) const noexcept { return lines[idx(l)]; }
};

struct Point {
  double s = 0;  // S'
  double u = 0;  // U'
};

struct AnchorSet {
  Point q;
  std::array<Point, 6> r{};  // indexed by Line

  const Point& r_of(Line l) const noexcept { return r[idx(l)]; }
};

enum class Subregion { P1, P2, P3, P4, P5, M1, M2, M3, M4, M5, M6, M7 };

inline constexpr std::array<Subregion, 12> kSubregions{
    Subregion::P1, Subregion::P2, Subregion::P3, Subregion::P4, Subregion::P5, Subregion::M1,
    Subregion::M2, Subregion::M3, Subregion::M4, Subregion::M5, Subregion::M6, Subregion::M7};

std::string_view to_string(Subregion r) noexcept;
std::optional<Subregion> subregion_from_string(std::string_view name) noexcept;

/// Signs of C'_ij = U' - f_ij(S'), row-major by Line.
using CPrimeSignature = std::array<Sign, 6>;

/// Subregions P1-P5 lie on the T > 0 side, M1-M7 on the T < 0 side.
Sign t_sign_of(Subregion r) noexcept;
const CPrimeSignature& c_prime_signature(Subregion r) noexcept;

/// U' = -(theta_L/theta_K) S'/(S'+1). Throws Error{AsymptotePole} at S' = -1.
double boundary_value(double s_prime, double labor_capital_ratio);
double boundary_value(double s_prime, const ShareTable& table);

/// Strictly inside the region admitted by g_KK g_TT - g_TK g_KT > 0 and
/// g_LL < 0: right branch and above it when T > 0, left branch and below it
/// when T < 0.
bool is_feasible(const EwsRatioVector& v, double labor_capital_ratio) noexcept;

LineCoeffs line_coefficients(const ShareTable& table);

AnchorSet anchor_points(const ShareTable& table);

std::array<double, 6> c_prime(const EwsRatioVector& v, const LineCoeffs& lines) noexcept;

/// Throws Error{Infeasible}, Error{OnLine} or Error{UnmatchedSignature}.
Subregion classify_subregion(const EwsRatioVector& v, const LineCoeffs& lines);

struct OrderingReport {
  /// S' of R_K1 < S' of R_K2 < S' of Q.
  std::array<double, 3> capital_chain{};
  /// S' of R_T1 < R_T2 < 0 < R_L2 < R_L1.
  std::array<double, 5> five_point_chain{};
  bool capital_chain_ok = false;
  bool five_point_chain_ok = false;
  /// The anchor set's S' coordinates equal the share-table expressions.
  bool anchors_consistent = false;

  bool ok() const noexcept { return capital_chain_ok && five_point_chain_ok && anchors_consistent; }
};

OrderingReport verify_anchor_ordering(const AnchorSet& anchors, const ShareTable& table);

}  // namespace ryb

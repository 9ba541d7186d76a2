#pragma once

// The 5x5 comparative-statics system in rates of change, its determinant,
// cofactors, and the Rybczynski / Stolper-Samuelson matrices.
//
// Closed forms are the product; the dense pivoted solve is the oracle they
// are checked against. A disagreement is raised, never averaged.

#include <array>
#include <string>

#include "ryb/equilibrium_data.hpp"
#include "ryb/geometry.hpp"
#include "ryb/linalg.hpp"
#include "ryb/substitution.hpp"
#include "ryb/types.hpp"

namespace ryb {

inline constexpr double kClosedFormRelTol = 1e-9;
inline constexpr double kResidualTol = 1e-10;
inline constexpr double kSignZeroTol = 1e-12;

/// Unknowns (w_T1, w_K1, w_L1, X_1, X_2); rows: two zero-profit rows, then
/// full employment of T, K, L.
struct SystemMatrix {
  linalg::Matrix<5> a{};
};

SystemMatrix assemble_system(const ShareTable& table, const EwsMatrix& g);

/// Log-differential shocks: P = p_1 - p_2 and (V_T, V_K, V_L).
struct ShockVector {
  double price = 0;
  Vec3 endowment{};

  linalg::Vector<5> rhs() const noexcept {
    return {0.0, -price, endowment[0], endowment[1], endowment[2]};
  }
};

/// Real factor prices measured in good 1 and output changes.
struct ResponseVector {
  Vec3 w_hat{};
  std::array<double, 2> x_hat{};

  linalg::Vector<5> stacked() const noexcept {
    return {w_hat[0], w_hat[1], w_hat[2], x_hat[0], x_hat[1]};
  }
};

/// Throws Error{SingularSystem}.
ResponseVector solve_responses(const SystemMatrix& sys, const ShockVector& shock);

/// ||A X - P||_inf.
double residual(const SystemMatrix& sys, const ShockVector& shock, const ResponseVector& x);

struct DeltaReport {
  double direct = 0;
  double closed_form = 0;       // A^2 g_KK theta_K + B^2 g_TT theta_T - 2AB g_KT theta_K, scaled
  double closed_form_ratio = 0; // the same expressed in (S, T, U)
  double max_rel_gap = 0;
};

/// Throws Error{ClosedFormMismatch} if the three values disagree beyond
/// relative 1e-9 or any of them is not negative.
DeltaReport determinant_delta(const SystemMatrix& sys, const ShareTable& table, const EwsMatrix& g);

struct CofactorTriple {
  double direct = 0;    // 3x3 determinant
  double expanded = 0;  // Sarrus expansion in g and lambda
  double factored = 0;  // E_ij T C'_ij
};

struct CofactorReport {
  std::array<CofactorTriple, 6> c{};  // indexed by Line
  double c_p1 = 0;
  double c_p2 = 0;
  double max_rel_gap = 0;

  const CofactorTriple& operator[](Line l) const noexcept { return c[idx(l)]; }
};

/// Throws Error{ClosedFormMismatch} or Error{DegenerateT}.
CofactorReport cofactors(const ShareTable& table, const EwsMatrix& g);

/// (X_1, X_2) from the Cramer expressions over the cofactor report.
std::array<double, 2> cramer_outputs(const CofactorReport& cof, double delta,
                                     const ShockVector& shock) noexcept;

/// Entry [j][i] = X_j / V_i = (-1)^(i+j) C_ij / Delta.
Mat2x3 rybczynski_matrix(const ShareTable& table, const EwsMatrix& g);

/// Oracle: entry [j][i] from a dense solve with a unit V_i shock.
Mat2x3 rybczynski_dense(const ShareTable& table, const EwsMatrix& g);

/// Row 0: (w_i - p_1)/P = -(theta_2/theta_i) X_2/V_i.
/// Row 1: (w_i - p_2)/P =  (theta_1/theta_i) X_1/V_i.
Mat2x3 stolper_samuelson_matrix(const ShareTable& table, const Mat2x3& rybczynski);

/// Oracle: both rows from a dense solve with a unit relative price shock.
Mat2x3 stolper_samuelson_dense(const ShareTable& table, const EwsMatrix& g);

enum class PatternKind { Rybczynski, StolperSamuelson };

struct SignPattern {
  std::array<std::array<Sign, 3>, 2> entries{};
  /// Some entry was within kSignZeroTol of zero.
  bool has_zero = false;

  bool operator==(const SignPattern& o) const noexcept { return entries == o.entries; }
  /// "+--/-++": row 1, slash, row 2.
  std::string str() const;
};

SignPattern sign_pattern_of(const Mat2x3& m, double zero_tol = kSignZeroTol) noexcept;

/// Transcribed table column for a subregion.
SignPattern sign_pattern_lookup(Subregion region, PatternKind kind) noexcept;

/// True exactly for P1, P2, P3, M3, M4, M5.
bool strong_rybczynski(Subregion region) noexcept;

}  // namespace ryb

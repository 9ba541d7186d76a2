// Sign tables of the twelve subregions. The C' signatures define the
// subregions; the Rybczynski and Stolper-Samuelson columns are transcribed
// separately and cross-checked against the sign algebra in the tests.

#include <string>

#include "ryb/geometry.hpp"
#include "ryb/statics.hpp"

namespace ryb {

namespace {

constexpr Sign P = Sign::Pos;
constexpr Sign N = Sign::Neg;

// Row-major by line: T1 K1 L1 / T2 K2 L2.
constexpr std::array<CPrimeSignature, 12> kCPrime{{
    {N, P, N, N, P, N},  // P1
    {N, P, P, N, P, N},  // P2
    {N, P, P, N, P, P},  // P3
    {N, P, P, P, P, P},  // P4
    {P, P, P, P, P, P},  // P5
    {P, P, P, P, P, P},  // M1
    {P, P, P, P, N, P},  // M2
    {P, N, P, P, N, P},  // M3
    {P, N, N, P, N, P},  // M4
    {P, N, N, P, N, N},  // M5
    {P, N, N, N, N, N},  // M6
    {N, N, N, N, N, N},  // M7
}};

using Rows = std::array<std::array<Sign, 3>, 2>;

constexpr std::array<Rows, 12> kRybczynski{{
    {{{P, N, N}, {N, P, P}}},  // P1
    {{{P, N, P}, {N, P, P}}},  // P2
    {{{P, N, P}, {N, P, N}}},  // P3
    {{{P, N, P}, {P, P, N}}},  // P4
    {{{N, N, P}, {P, P, N}}},  // P5
    {{{P, P, N}, {N, N, P}}},  // M1
    {{{P, P, N}, {N, P, P}}},  // M2
    {{{P, N, N}, {N, P, P}}},  // M3
    {{{P, N, P}, {N, P, P}}},  // M4
    {{{P, N, P}, {N, P, N}}},  // M5
    {{{P, N, P}, {P, P, N}}},  // M6
    {{{N, N, P}, {P, P, N}}},  // M7
}};

constexpr std::array<Rows, 12> kStolperSamuelson{{
    {{{P, N, N}, {P, N, N}}},  // P1
    {{{P, N, N}, {P, N, P}}},  // P2
    {{{P, N, P}, {P, N, P}}},  // P3
    {{{N, N, P}, {P, N, P}}},  // P4
    {{{N, N, P}, {N, N, P}}},  // P5
    {{{P, P, N}, {P, P, N}}},  // M1
    {{{P, N, N}, {P, P, N}}},  // M2
    {{{P, N, N}, {P, N, N}}},  // M3
    {{{P, N, N}, {P, N, P}}},  // M4
    {{{P, N, P}, {P, N, P}}},  // M5
    {{{N, N, P}, {P, N, P}}},  // M6
    {{{N, N, P}, {N, N, P}}},  // M7
}};

constexpr std::size_t region_index(Subregion r) noexcept { return static_cast<std::size_t>(r); }

}  // namespace

std::string_view to_string(Subregion r) noexcept {
  constexpr std::array<std::string_view, 12> names{"P1", "P2", "P3", "P4", "P5", "M1",
                                                   "M2", "M3", "M4", "M5", "M6", "M7"};
  return names[region_index(r)];
}

std::optional<Subregion> subregion_from_string(std::string_view name) noexcept {
  for (Subregion r : kSubregions) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

Sign t_sign_of(Subregion r) noexcept { return region_index(r) < 5 ? Sign::Pos : Sign::Neg; }

const CPrimeSignature& c_prime_signature(Subregion r) noexcept { return kCPrime[region_index(r)]; }

SignPattern sign_pattern_lookup(Subregion region, PatternKind kind) noexcept {
  SignPattern p;
  p.entries = kind == PatternKind::Rybczynski ? kRybczynski[region_index(region)]
                                              : kStolperSamuelson[region_index(region)];
  return p;
}

bool strong_rybczynski(Subregion region) noexcept {
  switch (region) {
    case Subregion::P1:
    case Subregion::P2:
    case Subregion::P3:
    case Subregion::M3:
    case Subregion::M4:
    case Subregion::M5:
      return true;
    default:
      return false;
  }
}

}  // namespace ryb

#include "ryb/geometry.hpp"

#include <cmath>
#include <sstream>

#include "ryb/error.hpp"

namespace ryb {

std::string_view to_string(Line l) noexcept {
  constexpr std::array<std::string_view, 6> names{"T1", "K1", "L1", "T2", "K2", "L2"};
  return names[idx(l)];
}

double boundary_value(double s_prime, double labor_capital_ratio) {
  if (!(std::abs(s_prime + 1.0) > kPoleTol)) {
    throw Error(ErrorCode::AsymptotePole, "boundary is undefined at S' = -1");
  }
  return -labor_capital_ratio * s_prime / (s_prime + 1.0);
}

double boundary_value(double s_prime, const ShareTable& table) {
  return boundary_value(s_prime, table.labor_capital_ratio());
}

bool is_feasible(const EwsRatioVector& v, double labor_capital_ratio) noexcept {
  if (!std::isfinite(v.s_prime) || !std::isfinite(v.u_prime)) return false;
  if (!(std::abs(v.s_prime + 1.0) > kPoleTol)) return false;
  const double b = -labor_capital_ratio * v.s_prime / (v.s_prime + 1.0);
  if (v.sign_t == Sign::Pos) return v.s_prime > -1.0 && v.u_prime > b;
  if (v.sign_t == Sign::Neg) return v.s_prime < -1.0 && v.u_prime < b;
  return false;
}

LineCoeffs line_coefficients(const ShareTable& table) {
  const double A = table.land_diff();
  const double B = table.capital_diff();
  const double E = table.labor_diff();
  const double th_t = table.factor_share(Factor::T);
  const double th_k = table.factor_share(Factor::K);
  const double th_l = table.factor_share(Factor::L);

  LineCoeffs out;
  out.labor_capital_ratio = table.labor_capital_ratio();
  for (std::size_t j = 0; j < 2; ++j) {
    // Line ij is built from the shares of the other sector.
    const std::size_t o = 1 - j;
    const double th_o = table.sector_share(o);
    out.lines[idx(line_of(Factor::T, j))] = {
        A * th_o / th_k * (1.0 - table.theta(Factor::T, o)),
        -B * table.lambda(Factor::K, o),
        E * table.lambda(Factor::L, o),
    };
    out.lines[idx(line_of(Factor::K, j))] = {
        A * table.lambda(Factor::T, o),
        -B * th_o / th_t * (1.0 - table.theta(Factor::K, o)),
        -E * th_k / th_t * table.lambda(Factor::L, o),
    };
    out.lines[idx(line_of(Factor::L, j))] = {
        -A * th_l / th_k * table.lambda(Factor::T, o),
        -B * th_l / th_t * table.lambda(Factor::K, o),
        -E * th_o / th_t * (1.0 - table.theta(Factor::L, o)),
    };
  }
  return out;
}

AnchorSet anchor_points(const ShareTable& table) {
  const double r = table.labor_capital_ratio();
  AnchorSet a;
  a.q = {table.capital_diff() / table.land_diff(), table.capital_diff() / table.labor_diff() * r};
  for (std::size_t j = 0; j < 2; ++j) {
    const std::size_t o = 1 - j;
    const double tt = table.theta(Factor::T, o);
    const double tk = table.theta(Factor::K, o);
    const double tl = table.theta(Factor::L, o);
    a.r[idx(line_of(Factor::T, j))] = {-tk / (1.0 - tt), tk / tl * r};
    a.r[idx(line_of(Factor::K, j))] = {-(1.0 - tk) / tt, (1.0 - tk) / -tl * r};
    a.r[idx(line_of(Factor::L, j))] = {tk / tt, -tk / (1.0 - tl) * r};
  }
  return a;
}

std::array<double, 6> c_prime(const EwsRatioVector& v, const LineCoeffs& lines) noexcept {
  std::array<double, 6> c{};
  for (Line l : kLines) c[idx(l)] = v.u_prime - lines[l](v.s_prime);
  return c;
}

Subregion classify_subregion(const EwsRatioVector& v, const LineCoeffs& lines) {
  if (!is_feasible(v, lines.labor_capital_ratio)) {
    std::ostringstream os;
    os << "(S', U') = (" << v.s_prime << ", " << v.u_prime << ") with T "
       << sign_char(v.sign_t) << " lies outside the admissible side of the boundary";
    throw Error(ErrorCode::Infeasible, os.str());
  }
  const auto c = c_prime(v, lines);
  CPrimeSignature sig{};
  for (Line l : kLines) {
    if (!(std::abs(c[idx(l)]) > kOnLineTol)) {
      throw Error(ErrorCode::OnLine,
                  "ratio vector lies on line " + std::string(to_string(l)) +
                      "; no sign pattern is defined on a border");
    }
    sig[idx(l)] = sign_of(c[idx(l)]);
  }
  for (Subregion r : kSubregions) {
    if (t_sign_of(r) == v.sign_t && c_prime_signature(r) == sig) return r;
  }
  std::string s;
  for (Sign x : sig) s.push_back(sign_char(x));
  throw Error(ErrorCode::UnmatchedSignature,
              "C' signature " + s + " with T " + sign_char(v.sign_t) + " matches no subregion");
}

OrderingReport verify_anchor_ordering(const AnchorSet& anchors, const ShareTable& table) {
  const double tt1 = table.theta(Factor::T, kSector1);
  const double tt2 = table.theta(Factor::T, kSector2);
  const double tk1 = table.theta(Factor::K, kSector1);
  const double tk2 = table.theta(Factor::K, kSector2);

  OrderingReport rep;
  rep.capital_chain = {-(1.0 - tk2) / tt2, -(1.0 - tk1) / tt1,
                       table.capital_diff() / table.land_diff()};
  rep.five_point_chain = {-tk2 / (1.0 - tt2), -tk1 / (1.0 - tt1), 0.0, tk1 / tt1, tk2 / tt2};

  const std::array<double, 3> capital_from_anchors{anchors.r_of(Line::K1).s,
                                                   anchors.r_of(Line::K2).s, anchors.q.s};
  const std::array<double, 5> five_from_anchors{anchors.r_of(Line::T1).s, anchors.r_of(Line::T2).s,
                                                0.0, anchors.r_of(Line::L2).s,
                                                anchors.r_of(Line::L1).s};
  rep.anchors_consistent = true;
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(capital_from_anchors[i] - rep.capital_chain[i]) > kIdentityTol) {
      rep.anchors_consistent = false;
    }
  }
  for (std::size_t i = 0; i < 5; ++i) {
    if (std::abs(five_from_anchors[i] - rep.five_point_chain[i]) > kIdentityTol) {
      rep.anchors_consistent = false;
    }
  }

  auto increasing = [](const auto& xs) {
    for (std::size_t i = 1; i < xs.size(); ++i) {
      if (!(xs[i - 1] < xs[i])) return false;
    }
    return true;
  };
  rep.capital_chain_ok = increasing(rep.capital_chain);
  rep.five_point_chain_ok = increasing(rep.five_point_chain);
  return rep;
}

}  // namespace ryb

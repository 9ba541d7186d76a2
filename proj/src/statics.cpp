#include "ryb/statics.hpp"

#include <cmath>
#include <sstream>

#include "ryb/error.hpp"

namespace ryb {

namespace {

constexpr auto T = idx(Factor::T);
constexpr auto K = idx(Factor::K);
constexpr auto L = idx(Factor::L);

[[noreturn]] void mismatch(const std::string& what, double a, double b) {
  std::ostringstream os;
  os.precision(17);
  os << what << ": " << a << " vs " << b;
  throw Error(ErrorCode::ClosedFormMismatch, os.str());
}

}  // namespace

SystemMatrix assemble_system(const ShareTable& table, const EwsMatrix& g) {
  SystemMatrix sys;
  for (std::size_t j = 0; j < 2; ++j) {
    for (Factor i : kFactors) sys.a[j][idx(i)] = table.theta(i, j);
  }
  for (Factor i : kFactors) {
    auto& row = sys.a[2 + idx(i)];
    for (Factor h : kFactors) row[idx(h)] = g(i, h);
    row[3] = table.lambda(i, kSector1);
    row[4] = table.lambda(i, kSector2);
  }
  return sys;
}

ResponseVector solve_responses(const SystemMatrix& sys, const ShockVector& shock) {
  const linalg::PivotedLu<5> lu(sys.a);
  const auto x = lu.solve(shock.rhs());
  return {{x[0], x[1], x[2]}, {x[3], x[4]}};
}

double residual(const SystemMatrix& sys, const ShockVector& shock, const ResponseVector& x) {
  const auto ax = linalg::multiply(sys.a, x.stacked());
  const auto p = shock.rhs();
  double r = 0.0;
  for (std::size_t i = 0; i < 5; ++i) r = std::max(r, std::abs(ax[i] - p[i]));
  return r;
}

DeltaReport determinant_delta(const SystemMatrix& sys, const ShareTable& table, const EwsMatrix& g) {
  const double A = table.land_diff();
  const double B = table.capital_diff();
  const double th_t = table.factor_share(Factor::T);
  const double th_k = table.factor_share(Factor::K);
  const double th_l = table.factor_share(Factor::L);
  // theta' = theta_1 theta_2 / (theta_T theta_K theta_L)
  const double theta_prime =
      table.sector_share(kSector1) * table.sector_share(kSector2) / (th_t * th_k * th_l);

  DeltaReport rep;
  rep.direct = linalg::determinant(sys.a);

  const double t1 = A * A * g(Factor::K, Factor::K) * th_k;
  const double t2 = B * B * g(Factor::T, Factor::T) * th_t;
  const double t3 = -2.0 * A * B * g(Factor::K, Factor::T) * th_k;
  rep.closed_form = theta_prime * (t1 + t2 + t3);

  const double s = g(Factor::L, Factor::K);
  const double t = g(Factor::L, Factor::T);
  const double u = g(Factor::K, Factor::T);
  const double r1 = (A + B) * (A + B) * u * th_k;
  const double r2 = s * th_l * A * A;
  const double r3 = t * th_l * B * B;
  rep.closed_form_ratio = -theta_prime * (r1 + r2 + r3);

  const double scale = theta_prime * std::max(std::abs(t1) + std::abs(t2) + std::abs(t3),
                                              std::abs(r1) + std::abs(r2) + std::abs(r3));
  rep.max_rel_gap = std::max({linalg::relative_gap(rep.direct, rep.closed_form, scale),
                              linalg::relative_gap(rep.direct, rep.closed_form_ratio, scale),
                              linalg::relative_gap(rep.closed_form, rep.closed_form_ratio, scale)});
  if (rep.max_rel_gap > kClosedFormRelTol) {
    mismatch("determinant direct vs closed forms", rep.direct, rep.closed_form);
  }
  if (!(rep.direct < 0.0 && rep.closed_form < 0.0 && rep.closed_form_ratio < 0.0)) {
    mismatch("determinant is not negative", rep.direct, rep.closed_form);
  }
  return rep;
}

CofactorReport cofactors(const ShareTable& table, const EwsMatrix& g) {
  const EwsRatioVector v = ews_ratio_vector(g);
  const LineCoeffs lines = line_coefficients(table);
  const auto cp = c_prime(v, lines);
  const double t_val = g(Factor::L, Factor::T);
  const double A = table.land_diff();
  const double B = table.capital_diff();
  const Vec3 top{A, B, 0.0};

  CofactorReport rep;
  for (std::size_t j = 0; j < 2; ++j) {
    // C_ij drops the column of sector j, so it is built on lambda of the other sector.
    const std::size_t o = 1 - j;
    auto row = [&](Factor f) {
      return Vec3{g(f, Factor::T), g(f, Factor::K), table.lambda(f, o)};
    };
    const double lt = table.lambda(Factor::T, o);
    const double lk = table.lambda(Factor::K, o);
    const double ll = table.lambda(Factor::L, o);
    const Mat3& m = g.g;

    std::array<std::array<double, 4>, 3> terms{{
        {A * m[K][K] * ll, B * lk * m[L][T], -A * m[L][K] * lk, -B * m[K][T] * ll},
        {A * m[T][K] * ll, B * lt * m[L][T], -A * m[L][K] * lt, -B * m[T][T] * ll},
        {A * m[T][K] * lk, B * lt * m[K][T], -A * m[K][K] * lt, -B * m[T][T] * lk},
    }};
    const std::array<double, 3> direct{
        linalg::det3({top, row(Factor::K), row(Factor::L)}),
        linalg::det3({top, row(Factor::T), row(Factor::L)}),
        linalg::det3({top, row(Factor::T), row(Factor::K)}),
    };
    for (Factor i : kFactors) {
      const Line l = line_of(i, j);
      const auto& tm = terms[idx(i)];
      CofactorTriple& c = rep.c[idx(l)];
      c.direct = direct[idx(i)];
      c.expanded = tm[0] + tm[1] + tm[2] + tm[3];
      c.factored = lines[l].e * t_val * cp[idx(l)];
      const double scale =
          std::abs(tm[0]) + std::abs(tm[1]) + std::abs(tm[2]) + std::abs(tm[3]);
      const double gap = std::max({linalg::relative_gap(c.direct, c.expanded, scale),
                                   linalg::relative_gap(c.direct, c.factored, scale),
                                   linalg::relative_gap(c.expanded, c.factored, scale)});
      rep.max_rel_gap = std::max(rep.max_rel_gap, gap);
      if (gap > kClosedFormRelTol) {
        mismatch("cofactor C_" + std::string(to_string(l)) + " representations disagree",
                 c.direct, c.factored);
      }
    }
    const double cp_val = linalg::det3({row(Factor::T), row(Factor::K), row(Factor::L)});
    (j == 0 ? rep.c_p1 : rep.c_p2) = cp_val;
  }
  return rep;
}

std::array<double, 2> cramer_outputs(const CofactorReport& cof, double delta,
                                     const ShockVector& shock) noexcept {
  const double p = shock.price;
  const auto& v = shock.endowment;
  const double x1 = (-p * cof.c_p1 + v[0] * cof[Line::T1].factored - v[1] * cof[Line::K1].factored +
                     v[2] * cof[Line::L1].factored) /
                    delta;
  const double x2 = (p * cof.c_p2 - v[0] * cof[Line::T2].factored + v[1] * cof[Line::K2].factored -
                     v[2] * cof[Line::L2].factored) /
                    delta;
  return {x1, x2};
}

Mat2x3 rybczynski_matrix(const ShareTable& table, const EwsMatrix& g) {
  const SystemMatrix sys = assemble_system(table, g);
  const double delta = determinant_delta(sys, table, g).closed_form;
  const CofactorReport cof = cofactors(table, g);
  Mat2x3 out{};
  for (Line l : kLines) {
    const std::size_t i = idx(line_factor(l));
    const std::size_t j = line_sector(l);
    const double sign = (i + j) % 2 == 0 ? 1.0 : -1.0;
    out[j][i] = sign * cof[l].factored / delta;
  }
  return out;
}

Mat2x3 rybczynski_dense(const ShareTable& table, const EwsMatrix& g) {
  const linalg::PivotedLu<5> lu(assemble_system(table, g).a);
  Mat2x3 out{};
  for (std::size_t i = 0; i < 3; ++i) {
    ShockVector shock;
    shock.endowment[i] = 1.0;
    const auto x = lu.solve(shock.rhs());
    out[0][i] = x[3];
    out[1][i] = x[4];
  }
  return out;
}

Mat2x3 stolper_samuelson_matrix(const ShareTable& table, const Mat2x3& ryb) {
  Mat2x3 out{};
  for (Factor f : kFactors) {
    const std::size_t i = idx(f);
    const double th_i = table.factor_share(f);
    out[0][i] = -table.sector_share(kSector2) / th_i * ryb[1][i];
    out[1][i] = table.sector_share(kSector1) / th_i * ryb[0][i];
  }
  return out;
}

Mat2x3 stolper_samuelson_dense(const ShareTable& table, const EwsMatrix& g) {
  ShockVector shock;
  shock.price = 1.0;
  const ResponseVector x = solve_responses(assemble_system(table, g), shock);
  Mat2x3 out{};
  for (std::size_t i = 0; i < 3; ++i) {
    out[0][i] = x.w_hat[i];
    // w_i - p_2 = (w_i - p_1) + (p_1 - p_2)
    out[1][i] = x.w_hat[i] + shock.price;
  }
  return out;
}

std::string SignPattern::str() const {
  std::string s;
  for (std::size_t r = 0; r < 2; ++r) {
    if (r) s.push_back('/');
    for (Sign x : entries[r]) s.push_back(sign_char(x));
  }
  return s;
}

SignPattern sign_pattern_of(const Mat2x3& m, double zero_tol) noexcept {
  SignPattern p;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      p.entries[r][c] = sign_of(m[r][c], zero_tol);
      if (p.entries[r][c] == Sign::Zero) p.has_zero = true;
    }
  }
  return p;
}

}  // namespace ryb

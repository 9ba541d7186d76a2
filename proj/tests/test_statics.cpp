#include <doctest.h>

#include <cmath>

#include "ryb/error.hpp"
#include "ryb/statics.hpp"
#include "support.hpp"

using namespace ryb;
using ryb::testing::reference_table;

namespace {

EwsMatrix cd_g(const ShareTable& t) { return ews_from_epsilon(epsilon_from_aes(cobb_douglas_aes(t), t), t); }

}  // namespace

TEST_CASE("linear algebra kernels") {
  const Mat3 m{{{2, -1, 0}, {1, 3, 4}, {0, 5, -2}}};
  linalg::Matrix<3> a{};
  for (std::size_t i = 0; i < 3; ++i) a[i] = m[i];
  CHECK(linalg::det3(m) == doctest::Approx(-54.0));
  CHECK(linalg::determinant(a) == doctest::Approx(-54.0));
  const linalg::PivotedLu<3> lu(a);
  const auto x = lu.solve({1.0, 2.0, 3.0});
  const auto back = linalg::multiply(a, x);
  for (std::size_t i = 0; i < 3; ++i) CHECK(back[i] == doctest::Approx(1.0 + i));

  linalg::Matrix<3> sing{};
  sing[0] = {1, 2, 3};
  sing[1] = {2, 4, 6};
  sing[2] = {0, 1, 1};
  const linalg::PivotedLu<3> slu(sing);
  CHECK(slu.singular());
  CHECK(slu.determinant() == 0.0);
  CHECK_THROWS_AS(slu.solve({1, 1, 1}), Error);
  CHECK(linalg::relative_gap(1.0, 1.0 + 1e-12) < 1e-11);
  CHECK(linalg::relative_gap(0.0, 1e-20, 1.0) < 1e-19);
}

TEST_CASE("system matrix layout") {
  const ShareTable t = reference_table();
  const EwsMatrix g = cd_g(t);
  const SystemMatrix sys = assemble_system(t, g);
  CHECK(sys.a[0][0] == 0.50);
  CHECK(sys.a[1][1] == 0.50);
  CHECK(sys.a[2][0] == g(Factor::T, Factor::T));
  CHECK(sys.a[2][3] == t.lambda(Factor::T, 0));
  CHECK(sys.a[2][4] == t.lambda(Factor::T, 1));
  CHECK(std::abs(sys.a[2][0] + sys.a[2][1] + sys.a[2][2]) < 1e-15);
}

TEST_CASE("determinant and its closed forms") {
  const ShareTable t = reference_table();
  const EwsMatrix g = cd_g(t);
  const DeltaReport d = determinant_delta(assemble_system(t, g), t, g);
  CHECK(d.direct == doctest::Approx(-0.16003959742616733).epsilon(1e-12));
  CHECK(d.closed_form == doctest::Approx(d.direct).epsilon(1e-12));
  CHECK(d.closed_form_ratio == doctest::Approx(d.direct).epsilon(1e-12));
  CHECK(d.max_rel_gap < 1e-12);
}

TEST_CASE("cofactor representations") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 300; ++k) {
    const auto inst = ryb::testing::make_instance(rng);
    const CofactorReport c = cofactors(inst.table, inst.g);
    CHECK(c.max_rel_gap <= kClosedFormRelTol);
    for (Line l : kLines) {
      CHECK(c[l].direct == doctest::Approx(c[l].factored).epsilon(1e-9));
      CHECK(c[l].direct == doctest::Approx(c[l].expanded).epsilon(1e-9));
    }
  }
}

TEST_CASE("Cramer outputs equal the dense solve") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 200; ++k) {
    const auto inst = ryb::testing::make_instance(rng);
    const SystemMatrix sys = assemble_system(inst.table, inst.g);
    const DeltaReport d = determinant_delta(sys, inst.table, inst.g);
    const CofactorReport c = cofactors(inst.table, inst.g);
    const ShockVector shock{ryb::testing::uniform(rng, -1, 1),
                            {ryb::testing::uniform(rng, -1, 1), ryb::testing::uniform(rng, -1, 1),
                             ryb::testing::uniform(rng, -1, 1)}};
    const auto x = cramer_outputs(c, d.closed_form, shock);
    const ResponseVector dense = solve_responses(sys, shock);
    CHECK(x[0] == doctest::Approx(dense.x_hat[0]).epsilon(1e-9).scale(1.0));
    CHECK(x[1] == doctest::Approx(dense.x_hat[1]).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("Rybczynski and Stolper-Samuelson matrices") {
  const ShareTable t = reference_table();
  const EwsMatrix g = cd_g(t);
  const Mat2x3 closed = rybczynski_matrix(t, g);
  const Mat2x3 dense = rybczynski_dense(t, g);
  const Mat2x3 ss = stolper_samuelson_matrix(t, closed);
  const Mat2x3 ss_dense = stolper_samuelson_dense(t, g);
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(closed[j][i] == doctest::Approx(dense[j][i]).epsilon(1e-10));
      CHECK(ss[j][i] == doctest::Approx(ss_dense[j][i]).epsilon(1e-10));
    }
  }
  CHECK(sign_pattern_of(closed).str() == "+-+/-++");
  CHECK(sign_pattern_of(ss).str() == "+--/+-+");
  // w_i - p_2 exceeds w_i - p_1 by the unit price gap.
  for (std::size_t i = 0; i < 3; ++i) CHECK(ss_dense[1][i] - ss_dense[0][i] == doctest::Approx(1.0));
}

TEST_CASE("sign extraction flags zeros") {
  Mat2x3 m{{{1.0, -1.0, 1e-13}, {-2.0, 2.0, 3.0}}};
  const SignPattern p = sign_pattern_of(m);
  CHECK(p.has_zero);
  CHECK(p.entries[0][2] == Sign::Zero);
  CHECK(p.str() == "+-0/-++");
}

TEST_CASE("linear-system contract") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 200; ++k) {
    const auto inst = ryb::testing::make_instance(rng);
    const SystemMatrix sys = assemble_system(inst.table, inst.g);
    const ResponseVector zero = solve_responses(sys, ShockVector{});
    for (double w : zero.stacked()) CHECK(w == 0.0);
    const ShockVector s{0.3, {0.1, -0.2, 0.05}};
    const ShockVector s2{0.3 * 2.5, {0.25, -0.5, 0.125}};
    const ResponseVector a = solve_responses(sys, s);
    const ResponseVector b = solve_responses(sys, s2);
    CHECK(residual(sys, s, a) < kResidualTol);
    const auto av = a.stacked();
    const auto bv = b.stacked();
    for (std::size_t i = 0; i < 5; ++i) CHECK(bv[i] == doctest::Approx(2.5 * av[i]).epsilon(1e-10).scale(1.0));
  }
}

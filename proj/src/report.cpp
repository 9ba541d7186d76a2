#include "ryb/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ryb/error.hpp"

namespace ryb {

using nlohmann::json;

namespace {

double max_relative_gap(const Mat2x3& a, const Mat2x3& b) {
  double scale = 0.0;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 3; ++c) scale = std::max({scale, std::abs(a[r][c]), std::abs(b[r][c])});
  }
  double gap = 0.0;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      gap = std::max(gap, linalg::relative_gap(a[r][c], b[r][c], scale));
    }
  }
  return gap;
}

json matrix_json(const Mat2x3& m) {
  return json::array({{m[0][0], m[0][1], m[0][2]}, {m[1][0], m[1][1], m[1][2]}});
}

json mat3_json(const Mat3& m) {
  json rows = json::array();
  for (const Vec3& r : m) rows.push_back({r[0], r[1], r[2]});
  return rows;
}

}  // namespace

Report analyze_ews(const ShareTable& table, const EwsMatrix& g, std::span<const ShockVector> shocks,
                   std::string name) {
  Report rep;
  rep.name = std::move(name);
  rep.ranking = check_intensity_ranking(table);
  if (!rep.ranking.ok()) throw Error(ErrorCode::RankingViolated, rep.ranking.describe_failure());
  rep.g = g;
  rep.ews_identities = check_ews_identities(g, table);
  rep.ratio = ews_ratio_vector(g);
  rep.quadrant = rep.ratio.quadrant();

  const LineCoeffs lines = line_coefficients(table);
  rep.region = classify_subregion(rep.ratio, lines);
  rep.strong = strong_rybczynski(rep.region);
  rep.rybczynski_lookup = sign_pattern_lookup(rep.region, PatternKind::Rybczynski);
  rep.stolper_samuelson_lookup = sign_pattern_lookup(rep.region, PatternKind::StolperSamuelson);

  const SystemMatrix sys = assemble_system(table, g);
  rep.delta = determinant_delta(sys, table, g);
  const CofactorReport cof = cofactors(table, g);
  rep.cofactor_gap = cof.max_rel_gap;

  rep.rybczynski = rybczynski_matrix(table, g);
  rep.stolper_samuelson = stolper_samuelson_matrix(table, rep.rybczynski);
  rep.rybczynski_dense_values = rybczynski_dense(table, g);
  rep.stolper_samuelson_dense_values = stolper_samuelson_dense(table, g);
  rep.rybczynski_dense_signs = sign_pattern_of(rep.rybczynski_dense_values);
  rep.stolper_samuelson_dense_signs = sign_pattern_of(rep.stolper_samuelson_dense_values);
  rep.rybczynski_gap = max_relative_gap(rep.rybczynski, rep.rybczynski_dense_values);
  rep.stolper_samuelson_gap = max_relative_gap(rep.stolper_samuelson, rep.stolper_samuelson_dense_values);

  std::vector<ShockVector> all;
  for (std::size_t i = 0; i < 3; ++i) {
    ShockVector unit;
    unit.endowment[i] = 1.0;
    all.push_back(unit);
  }
  all.push_back(ShockVector{1.0, {}});
  for (const ShockVector& s : all) {
    const ResponseVector x = solve_responses(sys, s);
    rep.max_residual = std::max(rep.max_residual, residual(sys, s, x));
  }
  for (const ShockVector& s : shocks) {
    ShockOutcome out;
    out.shock = s;
    out.response = solve_responses(sys, s);
    out.residual = residual(sys, s, out.response);
    out.cramer = cramer_outputs(cof, rep.delta.closed_form, s);
    out.cramer_gap = std::max(std::abs(out.cramer[0] - out.response.x_hat[0]),
                              std::abs(out.cramer[1] - out.response.x_hat[1]));
    rep.max_residual = std::max(rep.max_residual, out.residual);
    rep.shocks.push_back(out);
  }

  rep.oracle_agree = rep.rybczynski_lookup == rep.rybczynski_dense_signs &&
                     rep.stolper_samuelson_lookup == rep.stolper_samuelson_dense_signs &&
                     !rep.rybczynski_dense_signs.has_zero &&
                     !rep.stolper_samuelson_dense_signs.has_zero &&
                     rep.rybczynski_gap <= kClosedFormRelTol &&
                     rep.stolper_samuelson_gap <= kClosedFormRelTol;
  return rep;
}

Report analyze(const ShareTable& table, const AesTensor& aes, std::span<const ShockVector> shocks,
               std::string name) {
  const EpsilonTensor eps = epsilon_from_aes(aes, table);
  Report rep = analyze_ews(table, ews_from_epsilon(eps, table), shocks, std::move(name));
  rep.aes_validity = validate_aes(aes, table);
  return rep;
}

Report run_report(const Scenario& scenario) {
  validate_scenario(scenario);
  const ShareTable table = scenario.table();
  return analyze(table, scenario.aes(table), scenario.shocks, scenario.name);
}

json report_to_json(const Report& r) {
  json j;
  j["name"] = r.name;
  j["validation"] = {
      {"intensity_ranking", r.ranking.intensity_ranking},
      {"middle_factor_ranking", r.ranking.middle_factor_ranking},
      {"aes_valid", r.aes_validity.ok()},
      {"ews_identities", r.ews_identities.ok()},
      {"ews_max_row_sum", r.ews_identities.max_row_sum},
      {"ews_max_reciprocity_gap", r.ews_identities.max_reciprocity_gap},
      {"ews_minor", r.ews_identities.minor},
  };
  j["ews"] = mat3_json(r.g.g);
  j["ratio_vector"] = {{"S_prime", r.ratio.s_prime},
                       {"U_prime", r.ratio.u_prime},
                       {"sign_T", std::string(1, sign_char(r.ratio.sign_t))},
                       {"quadrant", std::string(to_string(r.quadrant))}};
  j["subregion"] = std::string(to_string(r.region));
  j["strong_rybczynski"] = r.strong;
  j["sign_patterns"] = {
      {"rybczynski", r.rybczynski_lookup.str()},
      {"stolper_samuelson", r.stolper_samuelson_lookup.str()},
      {"rybczynski_dense", r.rybczynski_dense_signs.str()},
      {"stolper_samuelson_dense", r.stolper_samuelson_dense_signs.str()},
  };
  j["rybczynski_matrix"] = matrix_json(r.rybczynski);
  j["stolper_samuelson_matrix"] = matrix_json(r.stolper_samuelson);
  j["oracle"] = {
      {"agree", r.oracle_agree},
      {"delta_direct", r.delta.direct},
      {"delta_closed_form", r.delta.closed_form},
      {"delta_closed_form_ratio", r.delta.closed_form_ratio},
      {"delta_rel_gap", r.delta.max_rel_gap},
      {"cofactor_rel_gap", r.cofactor_gap},
      {"rybczynski_rel_gap", r.rybczynski_gap},
      {"stolper_samuelson_rel_gap", r.stolper_samuelson_gap},
      {"max_residual", r.max_residual},
  };
  json shocks = json::array();
  for (const ShockOutcome& s : r.shocks) {
    shocks.push_back({
        {"P", s.shock.price},
        {"V", {s.shock.endowment[0], s.shock.endowment[1], s.shock.endowment[2]}},
        {"w_hat", {s.response.w_hat[0], s.response.w_hat[1], s.response.w_hat[2]}},
        {"x_hat", {s.response.x_hat[0], s.response.x_hat[1]}},
        {"residual", s.residual},
        {"cramer_gap", s.cramer_gap},
    });
  }
  j["shocks"] = shocks;
  return j;
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  char buf[160];
  auto line = [&](const char* fmt, auto... args) {
    std::snprintf(buf, sizeof buf, fmt, args...);
    os << buf << '\n';
  };
  if (!r.oracle_agree) {
    os << "!!! ORACLE MISMATCH: lookup signs or closed forms disagree with the dense solve !!!\n";
  }
  os << "scenario: " << (r.name.empty() ? "(unnamed)" : r.name) << '\n';
  line("ranking: intensity %s, middle factor %s; AES %s; EWS identities %s",
       r.ranking.intensity_ranking ? "ok" : "FAIL", r.ranking.middle_factor_ranking ? "ok" : "FAIL",
       r.aes_validity.ok() ? "ok" : "FAIL", r.ews_identities.ok() ? "ok" : "FAIL");
  os << "EWS g_ih (rows/cols T K L):\n";
  for (const Vec3& row : r.g.g) line("  % .9g  % .9g  % .9g", row[0], row[1], row[2]);
  line("ratio vector: S' = %.9g, U' = %.9g, T %c, quadrant %s", r.ratio.s_prime, r.ratio.u_prime,
       sign_char(r.ratio.sign_t), std::string(to_string(r.quadrant)).c_str());
  line("subregion: %s; strong Rybczynski: %s", std::string(to_string(r.region)).c_str(),
       r.strong ? "yes" : "no");
  line("Rybczynski signs:        %s (dense %s)", r.rybczynski_lookup.str().c_str(),
       r.rybczynski_dense_signs.str().c_str());
  line("Stolper-Samuelson signs: %s (dense %s)", r.stolper_samuelson_lookup.str().c_str(),
       r.stolper_samuelson_dense_signs.str().c_str());
  os << "Rybczynski matrix X_j/V_i:\n";
  for (const Vec3& row : r.rybczynski) line("  % .9g  % .9g  % .9g", row[0], row[1], row[2]);
  os << "Stolper-Samuelson matrix (w_i - p_j)/P:\n";
  for (const Vec3& row : r.stolper_samuelson) line("  % .9g  % .9g  % .9g", row[0], row[1], row[2]);
  line("Delta: direct %.9g, closed forms %.9g / %.9g (rel gap %.2e)", r.delta.direct,
       r.delta.closed_form, r.delta.closed_form_ratio, r.delta.max_rel_gap);
  line("oracle: cofactor gap %.2e, Rybczynski gap %.2e, Stolper-Samuelson gap %.2e, residual %.2e",
       r.cofactor_gap, r.rybczynski_gap, r.stolper_samuelson_gap, r.max_residual);
  for (const ShockOutcome& s : r.shocks) {
    line("shock P=%.6g V=(%.6g, %.6g, %.6g): X=(%.9g, %.9g) w=(%.9g, %.9g, %.9g)", s.shock.price,
         s.shock.endowment[0], s.shock.endowment[1], s.shock.endowment[2], s.response.x_hat[0],
         s.response.x_hat[1], s.response.w_hat[0], s.response.w_hat[1], s.response.w_hat[2]);
  }
  return os.str();
}

}  // namespace ryb

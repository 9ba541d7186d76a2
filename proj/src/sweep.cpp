#include "ryb/sweep.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <random>

#include "ryb/error.hpp"
#include "ryb/report.hpp"

namespace ryb {

namespace {

double parse_number(std::string_view s, std::string_view context) {
  double v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
    throw Error(ErrorCode::ParseError, "bad number '" + std::string(s) + "' in grid term '" +
                                           std::string(context) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t p = s.find(sep, start);
    out.push_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::array<double, 6> flatten(const std::array<CrossElasticities, 2>& c) {
  return {c[0].tk, c[0].tl, c[0].kl, c[1].tk, c[1].tl, c[1].kl};
}

}  // namespace

std::string_view to_string(SweepStatus s) noexcept {
  switch (s) {
    case SweepStatus::Classified: return "classified";
    case SweepStatus::RejectedAes: return "rejected (own-elasticity/NSD)";
    case SweepStatus::RejectedDegenerateT: return "rejected (degenerate T)";
    case SweepStatus::RejectedOnLine: return "rejected (on line)";
  }
  return "?";
}

GridSpec parse_grid_spec(std::string_view text) {
  GridSpec grid;
  text = trim(text);
  if (text.empty()) return grid;
  for (std::string_view term : split(text, ',')) {
    term = trim(term);
    const std::size_t eq = term.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "grid term '" + std::string(term) + "' has no '='");
    }
    const std::string_view name = trim(term.substr(0, eq));
    std::size_t axis = kSweepAxes.size();
    for (std::size_t k = 0; k < kSweepAxes.size(); ++k) {
      if (kSweepAxes[k] == name) axis = k;
    }
    if (axis == kSweepAxes.size()) {
      throw Error(ErrorCode::ParseError, "unknown grid axis '" + std::string(name) + "'");
    }
    if (grid[axis]) throw Error(ErrorCode::ParseError, "grid axis '" + std::string(name) + "' given twice");
    const auto parts = split(trim(term.substr(eq + 1)), ':');
    GridAxis a;
    if (parts.size() == 1) {
      a.lo = a.hi = parse_number(trim(parts[0]), term);
    } else if (parts.size() == 3) {
      a.lo = parse_number(trim(parts[0]), term);
      a.hi = parse_number(trim(parts[1]), term);
      const double n = parse_number(trim(parts[2]), term);
      if (n < 1 || n != std::floor(n) || n > 1e6) {
        throw Error(ErrorCode::ParseError, "grid count must be a positive integer in '" + std::string(term) + "'");
      }
      a.n = static_cast<int>(n);
    } else {
      throw Error(ErrorCode::ParseError, "grid term '" + std::string(term) + "' must be v or lo:hi:n");
    }
    grid[axis] = a;
  }
  return grid;
}

std::vector<SweepRow> run_sweep(const Scenario& base, const GridSpec& grid, const SweepOptions& options) {
  std::vector<ShareTable> tables;
  if (options.random_tables) {
    if (*options.random_tables < 1) throw Error(ErrorCode::ValidationError, "random table count must be positive");
    std::mt19937_64 rng(options.seed);
    for (int k = 0; k < *options.random_tables; ++k) tables.push_back(sample_share_table(rng));
  } else {
    tables.push_back(base.table());
  }

  const std::array<double, 6> base_sigma = flatten(base.aes_spec.cross_elasticities());
  std::array<int, 6> counts{};
  std::size_t points = 1;
  for (std::size_t k = 0; k < 6; ++k) {
    counts[k] = grid[k] ? grid[k]->n : 1;
    points *= static_cast<std::size_t>(counts[k]);
  }

  std::vector<SweepRow> rows;
  rows.reserve(points * tables.size());
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const ShareTable& table = tables[t];
    require_ranking(table);
    std::array<int, 6> k{};
    for (std::size_t p = 0; p < points; ++p) {
      // Last axis varies fastest.
      std::size_t rem = p;
      for (std::size_t a = 6; a-- > 0;) {
        k[a] = static_cast<int>(rem % static_cast<std::size_t>(counts[a]));
        rem /= static_cast<std::size_t>(counts[a]);
      }
      SweepRow row;
      row.row = rows.size();
      row.table_index = t;
      row.theta = table.theta();
      row.theta1 = table.sector_share(kSector1);
      for (std::size_t a = 0; a < 6; ++a) row.sigma[a] = grid[a] ? grid[a]->value(k[a]) : base_sigma[a];

      const std::array<CrossElasticities, 2> cross{
          CrossElasticities{row.sigma[0], row.sigma[1], row.sigma[2]},
          CrossElasticities{row.sigma[3], row.sigma[4], row.sigma[5]}};
      const AesTensor aes = complete_aes(cross, table);
      if (!validate_aes(aes, table).ok()) {
        row.status = SweepStatus::RejectedAes;
        rows.push_back(row);
        continue;
      }
      try {
        const Report r = analyze(table, aes);
        row.status = SweepStatus::Classified;
        row.ratio = r.ratio;
        row.quadrant = r.quadrant;
        row.region = r.region;
        row.strong = r.strong;
        row.rybczynski = r.rybczynski_lookup;
        row.stolper_samuelson = r.stolper_samuelson_lookup;
        row.oracle_agree = r.oracle_agree;
      } catch (const Error& e) {
        switch (e.code()) {
          case ErrorCode::DegenerateT: row.status = SweepStatus::RejectedDegenerateT; break;
          case ErrorCode::OnLine: row.status = SweepStatus::RejectedOnLine; break;
          case ErrorCode::Infeasible: row.status = SweepStatus::RejectedAes; break;
          default: throw;
        }
      }
      rows.push_back(row);
    }
  }
  return rows;
}

SweepSummary summarize(const std::vector<SweepRow>& rows) noexcept {
  SweepSummary s;
  s.total = rows.size();
  for (const SweepRow& r : rows) {
    if (r.status == SweepStatus::Classified) {
      ++s.classified;
      if (!r.oracle_agree) ++s.oracle_mismatches;
    } else {
      ++s.rejected;
    }
  }
  return s;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "row,table,theta_T1,theta_K1,theta_L1,theta_T2,theta_K2,theta_L2,theta_1,"
        "s1_TK,s1_TL,s1_KL,s2_TK,s2_TL,s2_KL,status,S_prime,U_prime,sign_T,quadrant,subregion,"
        "strong_rybczynski,rybczynski_signs,stolper_samuelson_signs,oracle_agree\n";
  for (const SweepRow& r : rows) {
    os << r.row << ',' << r.table_index;
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t i = 0; i < 3; ++i) os << ',' << num(r.theta[i][j]);
    }
    os << ',' << num(r.theta1);
    for (double s : r.sigma) os << ',' << num(s);
    os << ',' << to_string(r.status);
    if (r.status == SweepStatus::Classified) {
      os << ',' << num(r.ratio.s_prime) << ',' << num(r.ratio.u_prime) << ',' << sign_char(r.ratio.sign_t) << ','
         << to_string(r.quadrant) << ',' << to_string(r.region) << ',' << (r.strong ? "true" : "false") << ','
         << r.rybczynski.str() << ',' << r.stolper_samuelson.str() << ','
         << (r.oracle_agree ? "true" : "false");
    } else {
      os << ",,,,,,,,,";
    }
    os << '\n';
  }
}

void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  write_sweep_csv(f, rows);
  if (!f) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace ryb

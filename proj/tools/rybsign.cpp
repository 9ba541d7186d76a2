// rybsign: validate, report, figure and sweep commands over scenario files.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ryb/error.hpp"
#include "ryb/figure.hpp"
#include "ryb/report.hpp"
#include "ryb/scenario.hpp"
#include "ryb/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

int exit_code_for(ryb::ErrorCode code) {
  using ryb::ErrorCode;
  switch (code) {
    case ErrorCode::ValidationError:
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
    case ErrorCode::OnLine:
    case ErrorCode::DegenerateT:
    case ErrorCode::Infeasible:
    case ErrorCode::RankingViolated:
    case ErrorCode::NonStochasticColumns:
    case ErrorCode::OutOfRangeShare:
    case ErrorCode::InvalidAes:
      return kExitInput;
    default:
      return kExitInternal;
  }
}

ryb::FigureWindow parse_window(const std::string& text) {
  ryb::FigureWindow w;
  if (text.empty()) return w;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf:%lf", &w.s_min, &w.s_max, &w.u_min, &w.u_max) != 4 ||
      !(w.s_min < w.s_max) || !(w.u_min < w.u_max)) {
    throw ryb::Error(ryb::ErrorCode::ParseError, "window must be smin:smax:umin:umax with min < max");
  }
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rybczynski and Stolper-Samuelson sign patterns for a three-factor, two-good economy"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;
  std::string out;
  std::string window;
  std::string grid;
  int random_tables = 0;
  std::uint64_t seed = 1;

  auto* validate = app.add_subcommand("validate", "Check shares, rankings and substitution elasticities");
  validate->add_option("file", file, "Scenario JSON")->required();

  auto* report = app.add_subcommand("report", "Classify the economy and print sign patterns");
  report->add_option("file", file, "Scenario JSON")->required();
  report->add_flag("--json", as_json, "Emit JSON instead of text");

  auto* figure = app.add_subcommand("figure", "Render the EWS-ratio plane as SVG");
  figure->add_option("file", file, "Scenario JSON")->required();
  figure->add_option("-o,--output", out, "SVG path")->required();
  figure->add_option("--window", window, "smin:smax:umin:umax (default -4:4:-10:4)");

  auto* sweep = app.add_subcommand("sweep", "Classify a grid of cross elasticities, write CSV");
  sweep->add_option("file", file, "Template scenario JSON")->required();
  sweep->add_option("--grid", grid, "e.g. s1_TK=-2:2:9,s2_KL=0.5")->required();
  sweep->add_option("-o,--output", out, "CSV path")->required();
  sweep->add_option("--random-tables", random_tables, "Replace the share table with N sampled tables")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", seed, "Seed for --random-tables");

  CLI11_PARSE(app, argc, argv);

  try {
    const ryb::Scenario scenario = ryb::load_scenario(file);
    if (*validate) {
      std::cout << "ok: " << (scenario.name.empty() ? file : scenario.name) << " passes all checks\n";
      return kExitOk;
    }
    if (*report) {
      const ryb::Report r = ryb::run_report(scenario);
      if (as_json) {
        std::cout << ryb::report_to_json(r).dump(2) << '\n';
      } else {
        std::cout << ryb::report_to_text(r);
      }
      return r.oracle_agree ? kExitOk : kExitInternal;
    }
    if (*figure) {
      ryb::render_figure(scenario, out, parse_window(window));
      std::cout << "wrote " << out << '\n';
      return kExitOk;
    }
    if (*sweep) {
      ryb::SweepOptions opts;
      if (random_tables > 0) opts.random_tables = random_tables;
      opts.seed = seed;
      const auto rows = ryb::run_sweep(scenario, ryb::parse_grid_spec(grid), opts);
      ryb::write_sweep_csv(out, rows);
      const ryb::SweepSummary s = ryb::summarize(rows);
      std::cout << "rows " << s.total << ", classified " << s.classified << ", rejected " << s.rejected
                << ", oracle mismatches " << s.oracle_mismatches << '\n';
      return s.oracle_mismatches == 0 ? kExitOk : kExitInternal;
    }
  } catch (const ryb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

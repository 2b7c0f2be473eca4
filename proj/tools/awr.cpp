// Command-line front end: exact Riemann solves, vanishing-pressure sweeps,
// upwind simulations and full experiment reports.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or runtime error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "awr/experiment.hpp"

using namespace awr;

namespace {

struct CommonOpts {
  std::string config;
  std::string preset;
  std::string out;
  int n_cells = 0;
  double cfl = 0.0;
  double t_end = 0.0;
  std::string pairs;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config, "experiment config file");
  cmd->add_option("--preset", opts.preset, "case-i | case-ii | case-iii");
  cmd->add_option("--out", opts.out, "output directory");
  cmd->add_option("--n-cells", opts.n_cells, "grid cells");
  cmd->add_option("--cfl", opts.cfl, "CFL number in (0, 1]");
  cmd->add_option("--t-end", opts.t_end, "final time");
  cmd->add_option("--pairs", opts.pairs, "limit path A1:a1,A2:a2,...");
}

ExperimentConfig build_config(const CommonOpts& opts) {
  if (!opts.config.empty() && !opts.preset.empty()) {
    throw ConfigError("--config and --preset are mutually exclusive");
  }
  ExperimentConfig cfg;
  if (!opts.config.empty()) {
    cfg = load_config_file(opts.config);
  } else if (!opts.preset.empty()) {
    cfg = preset_config(preset_from_name(opts.preset));
  } else {
    throw ConfigError("need --config or --preset");
  }
  if (!opts.out.empty()) cfg.out_dir = opts.out;
  if (opts.n_cells > 0) cfg.grid = Grid(cfg.grid.x_min, cfg.grid.x_max, opts.n_cells);
  if (opts.cfl > 0.0) cfg.scheme.cfl = opts.cfl;
  if (opts.t_end > 0.0) cfg.scheme.t_end = opts.t_end;
  if (!opts.pairs.empty()) {
    cfg.pairs = parse_pair_list(opts.pairs);
    cfg.A = cfg.pairs.front().A;
    cfg.a = cfg.pairs.front().a;
  }
  return cfg;
}

void print_prediction(const ExperimentConfig& cfg, const LimitPrediction& lp) {
  std::printf("limit region: %s\n", to_string(lp.region));
  if (lp.region == LimitRegion::Ia) {
    std::printf("  delta shock in the a, A -> 0 limit: support x = %.12g t, "
                "weight %.12g t, pressure-term limit %.12g\n",
                *lp.delta_speed, *lp.weight_coefficient, *lp.pressure_limit);
    std::printf("  step profile: rho = %.12g (x < %.12g t), %.12g (x > %.12g t)\n",
                lp.step_left, *lp.delta_speed, lp.step_right, *lp.delta_speed);
  } else if (lp.region == LimitRegion::Ib) {
    const double limit = std::pow(
        cfg.B / (cfg.B / std::pow(cfg.left.rho, cfg.kappa) - (cfg.left.v - cfg.right.v)),
        1.0 / cfg.kappa);
    std::printf("  bounded intermediate density; finite limit rho* = %.12g\n", limit);
  } else {
    const double limit = std::pow(
        cfg.B / (cfg.right.v - cfg.left.v + cfg.B / std::pow(cfg.left.rho, cfg.kappa)),
        1.0 / cfg.kappa);
    std::printf("  rarefaction branch; limit rho* = %.12g (no vacuum)\n", limit);
  }
}

int cmd_solve(const CommonOpts& opts) {
  const ExperimentConfig cfg = build_config(opts);
  const EosParams eos = cfg.eos();
  const RiemannSolution sol = solve(eos, cfg.left, cfg.right);

  std::printf("left  state: rho = %.12g, v = %.12g\n", cfg.left.rho, cfg.left.v);
  std::printf("right state: rho = %.12g, v = %.12g\n", cfg.right.rho, cfg.right.v);
  std::printf("eos: A = %g, a = %g, B = %g, Gamma = %g, kappa = %g\n", cfg.A, cfg.a,
              cfg.B, cfg.Gamma, cfg.kappa);
  std::printf("solution: %s\n", to_string(sol.kind));
  if (sol.kind != WaveKind::Constant) {
    std::printf("  star state: rho* = %.12g, v* = %.12g\n", sol.star.rho, sol.star.v);
    if (sol.kind == WaveKind::ShockContact) {
      std::printf("  shock speed sigma1 = %.12g\n", sol.sigma1);
    } else {
      std::printf("  fan speeds: head = %.12g, tail = %.12g\n", sol.fan_head, sol.fan_tail);
    }
    std::printf("  contact speed sigma2 = %.12g\n", sol.sigma2);
  }
  print_prediction(cfg, predict(cfg.left, cfg.right, cfg.B, cfg.kappa));
  return 0;
}

void print_rows(const std::vector<SweepRow>& rows) {
  std::printf("%-10s %-10s %-20s %14s %14s %14s %14s %14s\n", "A", "a", "kind", "rho*",
              "sigma1", "sigma2", "eos_term", "rh_mass");
  for (const SweepRow& r : rows) {
    if (r.ok) {
      std::printf("%-10g %-10g %-20s %14.8g %14.8g %14.8g %14.8g %14.8g\n", r.A, r.a,
                  to_string(r.kind), r.rho_star, r.sigma1, r.sigma2, r.eos_term,
                  r.rh_mass);
    } else {
      std::printf("%-10g %-10g failed: %s\n", r.A, r.a, r.error.c_str());
    }
  }
}

int cmd_sweep(const CommonOpts& opts) {
  const ExperimentConfig cfg = build_config(opts);
  const LimitPrediction lp = predict(cfg.left, cfg.right, cfg.B, cfg.kappa);
  print_prediction(cfg, lp);

  std::vector<SweepRow> rows;
  if (lp.region == LimitRegion::II) {
    const NoVacuumResult res =
        no_vacuum_check(cfg.left, cfg.right, cfg.eos(), cfg.pairs);
    rows = res.rows;
    print_rows(rows);
    std::printf("rho* infimum over the sweep: %.12g (no vacuum: %s)\n",
                res.rho_star_infimum, res.no_vacuum ? "yes" : "no");
  } else {
    rows = sweep(cfg.left, cfg.right, cfg.eos(), cfg.pairs);
    print_rows(rows);
  }
  const bool all_ok =
      std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.ok; });
  return all_ok ? 0 : 1;
}

int cmd_simulate(const CommonOpts& opts) {
  const ExperimentConfig cfg = build_config(opts);
  const EosParams eos = cfg.eos();
  const Field f = run(eos, cfg.left, cfg.right, cfg.grid, cfg.scheme);
  const double max_rho = *std::max_element(f.rho.begin(), f.rho.end());
  std::printf("simulated to t = %.12g on %d cells (dx = %g, cfl = %g)\n", f.time,
              f.grid.n_cells, f.grid.dx(), cfg.scheme.cfl);
  std::printf("max density: %.12g\n", max_rho);

  const RiemannSolution exact = solve(eos, cfg.left, cfg.right);
  double l1 = 0.0;
  for (int j = 0; j < f.grid.n_cells; ++j) {
    l1 += std::abs(f.rho[j] - sample(eos, exact, f.grid.center(j) / f.time).rho);
  }
  l1 *= f.grid.dx();
  std::printf("L1(rho) distance to the exact solution: %.12g\n", l1);

  if (!opts.out.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
    char tbuf[32];
    std::snprintf(tbuf, sizeof(tbuf), "%g", f.time);
    const std::string path =
        (std::filesystem::path(cfg.out_dir) / ("profile_0_" + std::string(tbuf) + ".csv"))
            .string();
    write_profile_csv(path, eos, exact, f);
    std::printf("wrote %s\n", path.c_str());
  }
  return 0;
}

int cmd_report(const CommonOpts& opts) {
  ExperimentConfig cfg = build_config(opts);
  if (cfg.out_dir == ".") cfg.out_dir = "awr-report";
  const RunReport rep = run_experiment(cfg);
  emit_profiles(rep, {0.5 * cfg.scheme.t_end, cfg.scheme.t_end});

  std::printf("preset: %s, output: %s\n", to_string(cfg.preset), cfg.out_dir.c_str());
  print_prediction(cfg, rep.prediction);
  std::vector<SweepRow> rows;
  for (const PairReport& pr : rep.pairs) rows.push_back(pr.row);
  print_rows(rows);
  std::printf("\nchecks:\n");
  for (const CheckResult& c : rep.checks) {
    std::printf("  [%s] %s%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.empty() ? "" : " -- ", c.detail.c_str());
  }
  std::printf("summary.csv and profiles written to %s\n", cfg.out_dir.c_str());
  return rep.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical Riemann solutions of the Aw-Rascle system "
               "with an extended Chaplygin equation of state"};
  app.require_subcommand(1);

  CommonOpts opts;
  CLI::App* solve_cmd = app.add_subcommand("solve", "one exact Riemann solution");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "vanishing-pressure sweep table");
  CLI::App* sim_cmd = app.add_subcommand("simulate", "first-order upwind run");
  CLI::App* report_cmd = app.add_subcommand("report", "full experiment with checks");
  for (CLI::App* cmd : {solve_cmd, sweep_cmd, sim_cmd, report_cmd}) {
    add_common(cmd, opts);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(solve_cmd)) return cmd_solve(opts);
    if (app.got_subcommand(sweep_cmd)) return cmd_sweep(opts);
    if (app.got_subcommand(sim_cmd)) return cmd_simulate(opts);
    if (app.got_subcommand(report_cmd)) return cmd_report(opts);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}

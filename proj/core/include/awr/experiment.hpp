#ifndef AWR_EXPERIMENT_HPP
#define AWR_EXPERIMENT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "awr/eos.hpp"
#include "awr/exact_riemann.hpp"
#include "awr/limit_analysis.hpp"
#include "awr/upwind_scheme.hpp"

namespace awr {

// Built-in experiment presets. The first three reproduce the published
// vanishing-pressure studies: case-i is delta-shock data (region Ia),
// case-ii bounded shock data (region Ib), case-iii rarefaction data
// (region II).
enum class Preset { CaseI, CaseII, CaseIII, Custom };

const char* to_string(Preset preset);
Preset preset_from_name(const std::string& name);  // "case-i" | "case-ii" | "case-iii" | "custom"

struct ExperimentConfig {
  Preset preset = Preset::Custom;
  State left{1.0, 0.0};
  State right{1.0, 0.0};
  double A = 1.0;  // EOS point used by single solves/simulations
  double a = 0.01;
  double B = 1.0;
  double Gamma = 2.0;
  double kappa = 0.5;
  std::vector<ParamPair> pairs;  // the (A, a) limit path
  Grid grid{-1.0, 1.0, 800};
  SchemeConfig scheme;
  std::string out_dir = ".";

  EosParams eos() const { return {A, a, B, Gamma, kappa}; }
};

// Fully-populated configuration for a preset: initial data, EOS constants
// and the published (A, a) pair list, on the default grid x in [-1, 1],
// 800 cells, cfl = 0.5, t_end = 0.1.
ExperimentConfig preset_config(Preset preset);

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parse the flat key-value experiment format:
//
//   preset = case-i          # optional; loads all preset defaults
//   out = results
//   [state]                   rho_l, v_l, rho_r, v_r
//   [eos]                     A, a, B, Gamma, kappa
//   [grid]                    x_min, x_max, n_cells
//   [scheme]                  cfl, t_end
//   [sweep]                   pairs = A1:a1,A2:a2,...
//
// Keys after `preset` override the preset defaults. Without a preset, every
// key must be given. Overriding case-i with kappa = 0.75, Gamma = 3 and no
// explicit pair list selects the published pair list of that variant.
// Unknown keys or sections are rejected; errors carry the line number.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

// Parse a limit path "A1:a1,A2:a2,..." (every entry strictly positive).
std::vector<ParamPair> parse_pair_list(const std::string& text);

// Everything recorded for one (A, a) pair of an experiment.
struct PairReport {
  ParamPair pair{0.0, 0.0};
  SweepRow row;
  std::optional<RiemannSolution> exact;
  std::optional<Field> field;  // scheme result at t_end
  std::string scheme_error;    // set when the scheme failed
  double max_rho_num = 0.0;
  double l1_rho_error = 0.0;       // L1 distance of rho to the exact sampler
  double steepest_vgrad_x = 0.0;   // face position of the largest |dv|
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RunReport {
  ExperimentConfig config;
  LimitPrediction prediction;
  std::vector<PairReport> pairs;
  std::vector<CheckResult> checks;

  bool all_ok() const;
};

// Run the full experiment: exact solve + limit sweep row + scheme run per
// (A, a) pair, then the per-region trend checks. Writes summary.csv under
// config.out_dir. Deterministic: identical configs give byte-identical files.
RunReport run_experiment(const ExperimentConfig& cfg);

// Write profile_<pair>_<time>.csv (columns x, rho_exact, rho_num, v_exact,
// v_num) for every pair and requested time, plus a plots.gnu gnuplot script
// with one density and one velocity panel per profile. Times other than the
// report's t_end re-run the scheme. Times must be > 0.
void emit_profiles(const RunReport& report, const std::vector<double>& times);

// One combined exact/numerical profile at the field's own time.
void write_profile_csv(const std::string& path, const EosParams& eos,
                       const RiemannSolution& exact, const Field& field);

// 17-significant-digit decimal formatting used for all CSV output.
std::string format_full(double value);

}  // namespace awr

#endif  // AWR_EXPERIMENT_HPP

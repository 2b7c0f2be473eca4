#ifndef AWR_LIMIT_ANALYSIS_HPP
#define AWR_LIMIT_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "awr/eos.hpp"
#include "awr/exact_riemann.hpp"

namespace awr {

// Classification of the right state for the joint limit a, A -> 0. Region I
// splits along the asymptote v = v_l - B/rho_l^kappa of the limiting wave
// curve: at or below it (Ia) the intermediate density diverges and the
// solution concentrates into a delta shock; strictly between the asymptote
// and v_l (Ib) it stays bounded; at or above v_l (II) the solution is a
// rarefaction + contact and never develops a vacuum.
enum class LimitRegion { Ia, Ib, II };

const char* to_string(LimitRegion region);

// One (A, a) point on the limit path.
struct ParamPair {
  double A;
  double a;
};

/// Limit prediction for given data. The delta fields are populated only in
/// region Ia, where the limit density is a step plus a Dirac mass on
/// x = delta_speed * t whose weight grows as weight_coefficient * t, and the
/// van der Waals pressure term converges to pressure_limit.
struct LimitPrediction {
  LimitRegion region;
  double step_left;   // left.rho
  double step_right;  // right.rho
  std::optional<double> delta_speed;         // right.v
  std::optional<double> weight_coefficient;  // left.rho * (left.v - right.v)
  std::optional<double> pressure_limit;      // left.v - right.v - B/left.rho^kappa
};

/// One row of a vanishing-pressure sweep: the exact solution at a fixed
/// (A, a), reduced to the quantities whose limits the theory predicts.
/// For S+J rows, rh_mass = rho_star*(sigma2 - sigma1) obeys the jump-relation
/// identity rho_star*(sigma2-sigma1) = sigma2*rho_r - sigma1*rho_l
/// + rho_l*v_l - rho_r*v_r. For R+J rows sigma1 holds the fan tail speed and
/// the identity does not apply.
struct SweepRow {
  double A = 0.0;
  double a = 0.0;
  WaveKind kind = WaveKind::Constant;
  double rho_star = 0.0;
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  double eos_term = 0.0;  // A * (rho*/(1 - a*rho*))^Gamma
  double rh_mass = 0.0;   // rho* * (sigma2 - sigma1)
  bool ok = false;
  std::string error;  // set when !ok
};

LimitRegion classify_limit(const State& left, const State& right, double B, double kappa);

// Depends only on (left, right, B, kappa); invariant under A and a.
LimitPrediction predict(const State& left, const State& right, double B, double kappa);

// Exact solve at base EOS with (A, a) replaced by `pair`; never throws for
// solver failures (row comes back flagged instead).
SweepRow sweep_row(const State& left, const State& right, const EosParams& base,
                   const ParamPair& pair);

// Sweep the limit path for region-I data (right.v < left.v); each pair must
// be strictly positive. Rows are ordered as the input pairs; failed rows are
// flagged and the sweep continues.
std::vector<SweepRow> sweep(const State& left, const State& right, const EosParams& base,
                            const std::vector<ParamPair>& pairs);

struct NoVacuumResult {
  bool no_vacuum;            // infimum stayed above the floor
  double rho_star_infimum;   // min rho_star over the sweep
  double limit_density;      // analytic limit (B/(v_r - v_l + B/rho_l^kappa))^(1/kappa)
  std::vector<SweepRow> rows;
};

// Region-II data only (right.v >= left.v). The limiting wave curve keeps the
// intermediate density strictly positive; this certifies it on a finite sweep.
NoVacuumResult no_vacuum_check(const State& left, const State& right, const EosParams& base,
                               const std::vector<ParamPair>& pairs, double floor = 1e-8);

}  // namespace awr

#endif  // AWR_LIMIT_ANALYSIS_HPP

#include "awr/limit_analysis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace awr {

const char* to_string(LimitRegion region) {
  switch (region) {
    case LimitRegion::Ia: return "Ia";
    case LimitRegion::Ib: return "Ib";
    case LimitRegion::II: return "II";
  }
  return "?";
}

LimitRegion classify_limit(const State& left, const State& right, double B, double kappa) {
  const double threshold = left.v - B / std::pow(left.rho, kappa);
  if (right.v >= left.v) return LimitRegion::II;
  if (right.v <= threshold) return LimitRegion::Ia;  // boundary belongs to Ia
  return LimitRegion::Ib;
}

LimitPrediction predict(const State& left, const State& right, double B, double kappa) {
  LimitPrediction out;
  out.region = classify_limit(left, right, B, kappa);
  out.step_left = left.rho;
  out.step_right = right.rho;
  if (out.region == LimitRegion::Ia) {
    out.delta_speed = right.v;
    out.weight_coefficient = left.rho * (left.v - right.v);
    out.pressure_limit = left.v - right.v - B / std::pow(left.rho, kappa);
  }
  return out;
}

SweepRow sweep_row(const State& left, const State& right, const EosParams& base,
                   const ParamPair& pair) {
  SweepRow row;
  row.A = pair.A;
  row.a = pair.a;
  try {
    const EosParams eos(pair.A, pair.a, base.B, base.Gamma, base.kappa);
    const RiemannSolution sol = solve(eos, left, right);
    row.kind = sol.kind;
    row.rho_star = sol.star.rho;
    row.sigma1 = sol.sigma1;
    row.sigma2 = sol.sigma2;
    row.eos_term =
        pair.A * std::pow(sol.star.rho / (1.0 - pair.a * sol.star.rho), base.Gamma);
    row.rh_mass = sol.star.rho * (sol.sigma2 - sol.sigma1);
    row.ok = true;
  } catch (const std::exception& e) {
    row.ok = false;
    row.error = e.what();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.rho_star = row.sigma1 = row.sigma2 = row.eos_term = row.rh_mass = nan;
  }
  return row;
}

namespace {

void check_pairs(const std::vector<ParamPair>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("sweep: empty pair list");
  for (const ParamPair& q : pairs) {
    if (!(q.A > 0.0) || !(q.a > 0.0)) {
      throw std::invalid_argument("sweep: every (A, a) pair must be strictly positive");
    }
  }
}

}  // namespace

std::vector<SweepRow> sweep(const State& left, const State& right, const EosParams& base,
                            const std::vector<ParamPair>& pairs) {
  if (classify_limit(left, right, base.B, base.kappa) == LimitRegion::II) {
    throw std::invalid_argument("sweep: expects region-I data (right.v < left.v)");
  }
  check_pairs(pairs);
  std::vector<SweepRow> rows;
  rows.reserve(pairs.size());
  for (const ParamPair& q : pairs) rows.push_back(sweep_row(left, right, base, q));
  return rows;
}

NoVacuumResult no_vacuum_check(const State& left, const State& right, const EosParams& base,
                               const std::vector<ParamPair>& pairs, double floor) {
  if (classify_limit(left, right, base.B, base.kappa) != LimitRegion::II) {
    throw std::invalid_argument("no_vacuum_check: expects region-II data (right.v >= left.v)");
  }
  check_pairs(pairs);

  NoVacuumResult out;
  out.limit_density = std::pow(
      base.B / (right.v - left.v + base.B / std::pow(left.rho, base.kappa)),
      1.0 / base.kappa);
  out.rho_star_infimum = std::numeric_limits<double>::infinity();
  for (const ParamPair& q : pairs) {
    SweepRow row = sweep_row(left, right, base, q);
    if (row.ok && row.rho_star < out.rho_star_infimum) out.rho_star_infimum = row.rho_star;
    out.rows.push_back(std::move(row));
  }
  out.no_vacuum = std::isfinite(out.rho_star_infimum) && out.rho_star_infimum > floor;
  return out;
}

}  // namespace awr

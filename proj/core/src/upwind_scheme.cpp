#include "awr/upwind_scheme.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace awr {

double Mat2::max_abs() const {
  return std::max(std::max(std::abs(m00), std::abs(m01)),
                  std::max(std::abs(m10), std::abs(m11)));
}

Grid::Grid(double x_min_, double x_max_, int n_cells_)
    : x_min(x_min_), x_max(x_max_), n_cells(n_cells_) {
  if (!(x_min < x_max)) throw std::invalid_argument("Grid: x_min must be < x_max");
  if (n_cells < 4) throw std::invalid_argument("Grid: need at least 4 cells");
}

BlowUpError::BlowUpError(int cell_, double time_, const std::string& what)
    : std::runtime_error("blow-up in cell " + std::to_string(cell_) + " at t=" +
                         std::to_string(time_) + ": " + what),
      cell(cell_),
      time(time_) {}

Mat2 coefficient_matrix(const EosParams& p, const State& s) {
  const double pd = pressure_derivative(p, s.rho);
  return {s.v, s.rho, 0.0, s.v - s.rho * pd};
}

Eigensystem eigendecomposition(const EosParams& p, const State& s) {
  const double pd = pressure_derivative(p, s.rho);
  Eigensystem e;
  e.R = {1.0 / pd, -1.0 / pd, 0.0, 1.0};
  e.Lambda = {s.v, 0.0, 0.0, s.v - s.rho * pd};
  e.L = {pd, 1.0, 0.0, 1.0};
  return e;
}

std::pair<Mat2, Mat2> split(const EosParams& p, const State& s) {
  const Mat2 b = coefficient_matrix(p, s);
  Eigensystem e = eigendecomposition(p, s);
  e.Lambda.m00 = std::abs(e.Lambda.m00);
  e.Lambda.m11 = std::abs(e.Lambda.m11);
  const Mat2 abs_b = e.R * e.Lambda * e.L;
  return {0.5 * (b + abs_b), 0.5 * (b - abs_b)};
}

double stable_dt(const EosParams& p, const Field& f, double cfl) {
  if (!(cfl > 0.0 && cfl <= 1.0)) {
    throw std::invalid_argument("stable_dt: cfl must lie in (0, 1]");
  }
  double max_speed = 0.0;
  for (int j = 0; j < f.grid.n_cells; ++j) {
    const State s = f.state(j);
    max_speed = std::max(max_speed,
                         std::max(std::abs(lambda1(p, s)), std::abs(lambda2(s))));
  }
  if (max_speed == 0.0) return cfl * f.grid.dx();
  return cfl * f.grid.dx() / max_speed;
}

Field step(const EosParams& p, const Field& f, double dt) {
  const int n = f.grid.n_cells;
  const double ratio = dt / f.grid.dx();
  Field out = f;
  out.time = f.time + dt;

  for (int j = 0; j < n; ++j) {
    const auto [b_plus, b_minus] = split(p, f.state(j));
    const int jm = std::max(j - 1, 0);      // outflow ghosts copy the edge cells
    const int jp = std::min(j + 1, n - 1);
    const double dr_rho = f.rho[jp] - f.rho[j];
    const double dr_v = f.v[jp] - f.v[j];
    const double dl_rho = f.rho[j] - f.rho[jm];
    const double dl_v = f.v[j] - f.v[jm];

    out.rho[j] = f.rho[j] - ratio * (b_minus.m00 * dr_rho + b_minus.m01 * dr_v +
                                     b_plus.m00 * dl_rho + b_plus.m01 * dl_v);
    out.v[j] = f.v[j] - ratio * (b_minus.m10 * dr_rho + b_minus.m11 * dr_v +
                                 b_plus.m10 * dl_rho + b_plus.m11 * dl_v);

    if (!admissible(p, out.state(j))) {
      throw BlowUpError(j, out.time,
                        "state (rho=" + std::to_string(out.rho[j]) + ", v=" +
                            std::to_string(out.v[j]) + ") left the admissible domain");
    }
  }
  return out;
}

Field run(const EosParams& p, const State& left, const State& right, const Grid& grid,
          const SchemeConfig& cfg) {
  if (!admissible(p, left) || !admissible(p, right)) {
    throw std::domain_error("run: inadmissible initial states");
  }
  if (left.v < 0.0 || right.v < 0.0) {
    throw std::domain_error("run: initial velocities must be >= 0");
  }
  if (!(grid.x_min < 0.0 && grid.x_max > 0.0)) {
    throw std::invalid_argument("run: grid must straddle the jump at x = 0");
  }
  if (!(cfg.t_end > 0.0)) throw std::invalid_argument("run: t_end must be > 0");

  Field f{grid, std::vector<double>(grid.n_cells), std::vector<double>(grid.n_cells), 0.0};
  for (int j = 0; j < grid.n_cells; ++j) {
    const State& s = grid.center(j) < 0.0 ? left : right;
    f.rho[j] = s.rho;
    f.v[j] = s.v;
  }

  long steps = 0;
  while (cfg.t_end - f.time > 1e-12 * cfg.t_end) {
    if (++steps > cfg.max_steps) {
      throw MaxStepsError("run: exceeded max_steps = " + std::to_string(cfg.max_steps) +
                          " before reaching t_end");
    }
    const double dt = std::min(stable_dt(p, f, cfg.cfl), cfg.t_end - f.time);
    f = step(p, f, dt);
  }
  return f;
}

}  // namespace awr

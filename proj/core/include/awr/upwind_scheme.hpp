#ifndef AWR_UPWIND_SCHEME_HPP
#define AWR_UPWIND_SCHEME_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "awr/eos.hpp"

namespace awr {

// Row-major 2x2 matrix; just enough algebra for the split-matrix scheme.
struct Mat2 {
  double m00 = 0.0, m01 = 0.0;
  double m10 = 0.0, m11 = 0.0;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
  }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.m00 + y.m00, x.m01 + y.m01, x.m10 + y.m10, x.m11 + y.m11};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.m00 - y.m00, x.m01 - y.m01, x.m10 - y.m10, x.m11 - y.m11};
  }
  friend Mat2 operator*(double s, const Mat2& x) {
    return {s * x.m00, s * x.m01, s * x.m10, s * x.m11};
  }
  double max_abs() const;
};

// Uniform cell-centered grid.
struct Grid {
  Grid(double x_min, double x_max, int n_cells);

  double x_min;
  double x_max;
  int n_cells;

  double dx() const { return (x_max - x_min) / n_cells; }
  double center(int j) const { return x_min + (j + 0.5) * dx(); }
};

// Discrete solution: one (rho, v) pair per cell.
struct Field {
  Grid grid;
  std::vector<double> rho;
  std::vector<double> v;
  double time = 0.0;

  State state(int j) const { return {rho[j], v[j]}; }
};

struct SchemeConfig {
  double cfl = 0.5;       // in (0, 1]
  double t_end = 0.1;
  long max_steps = 1000000;
  // Boundary treatment is zero-gradient (outflow) ghost cells.
};

// A cell left the admissible domain during an update.
struct BlowUpError : std::runtime_error {
  BlowUpError(int cell_, double time_, const std::string& what);
  int cell;
  double time;
};

struct MaxStepsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficient matrix of the primitive form U_t + B U_x = 0:
//   B = [ v      rho        ]
//       [ 0      v - rho p' ]
Mat2 coefficient_matrix(const EosParams& p, const State& s);

// Exact eigendecomposition B = R * Lambda * L with
//   R = [ 1/p'  -1/p' ]   Lambda = diag(v, v - rho p')   L = [ p'  1 ]
//       [ 0      1    ]                                      [ 0   1 ]
// R*L is the identity; note the diagonal carries (lambda2, lambda1).
struct Eigensystem {
  Mat2 R;
  Mat2 Lambda;
  Mat2 L;
};
Eigensystem eigendecomposition(const EosParams& p, const State& s);

// Upwind splitting B = B_plus + B_minus via |B| = R |Lambda| L:
// B_plus = (B + |B|)/2 has eigenvalues (lambda + |lambda|)/2 >= 0,
// B_minus = (B - |B|)/2 the nonpositive counterparts.
std::pair<Mat2, Mat2> split(const EosParams& p, const State& s);

// cfl * dx / max_j max(|lambda1|, |lambda2|); cfl * dx when the field is
// entirely at rest.
double stable_dt(const EosParams& p, const Field& f, double cfl);

// One explicit update
//   U_j(n+1) = U_j - dt/dx * { B_j_minus (U_{j+1} - U_j) + B_j_plus (U_j - U_{j-1}) }
// with the coefficient matrices frozen at level n and ghost cells copying the
// edge cells. Throws BlowUpError when a cell leaves the admissible domain.
Field step(const EosParams& p, const Field& f, double dt);

// Evolve two-state data with the jump at x = 0 (the grid must straddle 0)
// until cfg.t_end, choosing dt from stable_dt and clipping the final step.
Field run(const EosParams& p, const State& left, const State& right, const Grid& grid,
          const SchemeConfig& cfg);

}  // namespace awr

#endif  // AWR_UPWIND_SCHEME_HPP

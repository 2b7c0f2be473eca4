#ifndef AWR_EXACT_RIEMANN_HPP
#define AWR_EXACT_RIEMANN_HPP

#include <stdexcept>
#include <utility>

#include "awr/eos.hpp"

namespace awr {

// Side of the phase-plane wave curve the right state falls on. Both the
// shock and the rarefaction branch satisfy v + p(rho) = v_l + p_l, so the
// velocity comparison alone decides the side.
enum class Region {
  I,          // right.v < left.v : shock + contact
  II,         // right.v > left.v : rarefaction + contact
  Coincident  // right.v == left.v
};

enum class WaveKind { Constant, ShockContact, RarefactionContact };

const char* to_string(WaveKind kind);

// The wave-curve equation p(rho) = p_target has no admissible root. Only
// possible when A = 0, where the pressure range is (-inf, 0).
struct NoRootError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Data whose bounded solution does not exist for A = 0: the problem sits in
// the delta-shock regime of the vanishing-pressure limit. limit_analysis
// provides the limit prediction for such data.
struct DeltaShockRegimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bisection exhausted its iteration budget before meeting the residual
// tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Self-similar solution of the two-state problem. The lambda1 wave (shock
/// or rarefaction) connects `left` to `star`; the contact at sigma2 = right.v
/// connects `star` to `right`.
///
/// All fields are always populated so the value is total:
///  - fan_head/fan_tail hold lambda1(left) and lambda1(star) for every kind;
///    for ShockContact they are the Lax bounds around sigma1 rather than
///    wave positions.
///  - sigma1 is the shock speed for ShockContact, fan_tail for
///    RarefactionContact and sigma2 for Constant.
///  - For Constant, star == left == right.
struct RiemannSolution {
  WaveKind kind;
  State left;
  State right;
  State star;
  double sigma1;
  double fan_head;
  double fan_tail;
  double sigma2;
};

Region classify(const State& left, const State& right);

// Unique rho* with pressure(rho*) = left.v + pressure(left.rho) - v_star,
// by bisection on the strictly monotone pressure. The residual meets
// |p(rho*) - p_target| <= 1e-12 * max(1, |p_target|). Throws NoRootError
// when the target is outside the attainable pressure range (A = 0 only)
// and ConvergenceError past 200 iterations.
double solve_star_density(const EosParams& p, const State& left, double v_star);

// sigma1 = left.v - star.rho * (p(star) - p(left)) / (star.rho - left.rho).
// Requires star.rho != left.rho.
double shock_speed(const EosParams& p, const State& left, const State& star);

// Construct the exact solution. Requires admissible states with v >= 0.
// Region I data under A = 0 may have no bounded solution; that raises
// DeltaShockRegimeError. Equal velocities with unequal densities yield a
// pure contact, represented as a RarefactionContact with an empty fan.
RiemannSolution solve(const EosParams& p, const State& left, const State& right);

// Evaluate the solution at the self-similar coordinate xi = x/t. At an exact
// discontinuity location the right-limit state is returned. Inside a fan the
// state solves lambda1 = xi on the curve v(rho) = v_l + p_l - p(rho).
State sample(const EosParams& p, const RiemannSolution& sol, double xi);

// Rankine-Hugoniot residuals ( -sigma[rho] + [rho v],
// -sigma[rho(v+p)] + [rho v(v+p)] ) with [q] = q_left - q_right.
std::pair<double, double> rh_residual(const EosParams& p, const State& left,
                                      const State& right, double sigma);

}  // namespace awr

#endif  // AWR_EXACT_RIEMANN_HPP

#include "awr/exact_riemann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace awr {

namespace {

constexpr int kMaxBisection = 200;

void check_state(const EosParams& p, const State& s, const char* who) {
  if (!admissible(p, s)) {
    throw std::domain_error(std::string(who) + ": inadmissible state (rho=" +
                            std::to_string(s.rho) + ", v=" + std::to_string(s.v) + ")");
  }
}

}  // namespace

const char* to_string(WaveKind kind) {
  switch (kind) {
    case WaveKind::Constant: return "constant";
    case WaveKind::ShockContact: return "shock+contact";
    case WaveKind::RarefactionContact: return "rarefaction+contact";
  }
  return "?";
}

Region classify(const State& left, const State& right) {
  if (right.v < left.v) return Region::I;
  if (right.v > left.v) return Region::II;
  return Region::Coincident;
}

double solve_star_density(const EosParams& p, const State& left, double v_star) {
  check_state(p, left, "solve_star_density");
  if (v_star == left.v) return left.rho;

  const double p_left = pressure(p, left.rho);
  const double p_target = left.v + p_left - v_star;
  const double tol = 1e-12 * std::max(1.0, std::abs(p_target));

  double lo, hi;
  if (v_star < left.v) {
    // Compression: the root lies above left.rho.
    lo = left.rho;
    hi = p.rho_sup();
    if (!std::isfinite(hi)) {
      if (p.A == 0.0 && p_target >= 0.0) {
        throw NoRootError("solve_star_density: target pressure " +
                          std::to_string(p_target) +
                          " is outside the range (-inf, 0) of the A = 0 pressure");
      }
      hi = std::max(2.0 * left.rho, 1.0);
      int doublings = 0;
      while (pressure(p, hi) < p_target) {
        hi *= 2.0;
        if (++doublings > 2000) {
          throw NoRootError("solve_star_density: failed to bracket the target pressure");
        }
      }
    }
  } else {
    // Expansion: the root lies below left.rho.
    lo = p.rho_min();
    hi = left.rho;
  }

  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < kMaxBisection; ++i) {
    mid = 0.5 * (lo + hi);
    const double f = pressure(p, mid) - p_target;
    if (std::abs(f) <= tol) return mid;
    if (f < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw ConvergenceError("solve_star_density: no convergence after " +
                         std::to_string(kMaxBisection) + " bisections");
}

double shock_speed(const EosParams& p, const State& left, const State& star) {
  if (star.rho == left.rho) {
    throw std::domain_error("shock_speed: degenerate jump (star.rho == left.rho)");
  }
  const double dp = pressure(p, star.rho) - pressure(p, left.rho);
  return left.v - star.rho * dp / (star.rho - left.rho);
}

RiemannSolution solve(const EosParams& p, const State& left, const State& right) {
  check_state(p, left, "solve");
  check_state(p, right, "solve");
  if (left.v < 0.0 || right.v < 0.0) {
    throw std::domain_error("solve: initial velocities must be >= 0");
  }

  const Region region = classify(left, right);
  if (region == Region::Coincident && left.rho == right.rho) {
    const double lam = lambda1(p, left);
    return {WaveKind::Constant, left, right, left, right.v, lam, lam, right.v};
  }

  double rho_star;
  try {
    rho_star = solve_star_density(p, left, right.v);
  } catch (const NoRootError& e) {
    throw DeltaShockRegimeError(
        std::string("solve: no bounded solution for this data at A = 0 "
                    "(vanishing-pressure delta-shock regime; see limit_analysis): ") +
        e.what());
  }
  const State star{rho_star, right.v};
  const double head = lambda1(p, left);
  const double tail = lambda1(p, star);

  if (region == Region::I) {
    const double s1 = shock_speed(p, left, star);
    return {WaveKind::ShockContact, left, right, star, s1, head, tail, right.v};
  }
  // Region II proper, or a pure contact (equal velocities, unequal densities)
  // as a zero-width fan.
  return {WaveKind::RarefactionContact, left, right, star, tail, head, tail, right.v};
}

namespace {

// State inside the fan: the unique rho on [star.rho, left.rho] with
// lambda1(rho, v(rho)) = xi along v(rho) = v_l + p_l - p(rho). lambda1 is
// strictly decreasing in rho there (rarefaction_slope <= 0), so bisection
// applies.
State fan_state(const EosParams& p, const RiemannSolution& sol, double xi) {
  const double invariant = sol.left.v + pressure(p, sol.left.rho);
  double lo = sol.star.rho;
  double hi = sol.left.rho;
  if (lo == hi) return {sol.left.rho, sol.left.v};

  const double tol = 1e-10 * std::max(1.0, std::abs(xi));
  auto speed_at = [&](double rho) {
    return invariant - pressure(p, rho) - rho * pressure_derivative(p, rho);
  };
  double rho = 0.5 * (lo + hi);
  for (int i = 0; i < kMaxBisection; ++i) {
    rho = 0.5 * (lo + hi);
    const double f = speed_at(rho) - xi;
    if (std::abs(f) <= tol) break;
    if (f > 0.0) {
      lo = rho;  // speed too high -> rho too small
    } else {
      hi = rho;
    }
  }
  return {rho, invariant - pressure(p, rho)};
}

}  // namespace

State sample(const EosParams& p, const RiemannSolution& sol, double xi) {
  switch (sol.kind) {
    case WaveKind::Constant:
      return sol.left;
    case WaveKind::ShockContact:
      if (xi < sol.sigma1) return sol.left;
      if (xi < sol.sigma2) return sol.star;
      return sol.right;
    case WaveKind::RarefactionContact:
      if (xi < sol.fan_head) return sol.left;
      if (xi <= sol.fan_tail) return fan_state(p, sol, xi);
      if (xi < sol.sigma2) return sol.star;
      return sol.right;
  }
  throw std::logic_error("sample: unreachable");
}

std::pair<double, double> rh_residual(const EosParams& p, const State& left,
                                      const State& right, double sigma) {
  const double pl = pressure(p, left.rho);
  const double pr = pressure(p, right.rho);
  const double mass = -sigma * (left.rho - right.rho) +
                      (left.rho * left.v - right.rho * right.v);
  const double momentum =
      -sigma * (left.rho * (left.v + pl) - right.rho * (right.v + pr)) +
      (left.rho * left.v * (left.v + pl) - right.rho * right.v * (right.v + pr));
  return {mass, momentum};
}

}  // namespace awr

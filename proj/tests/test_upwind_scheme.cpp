#include "awr/upwind_scheme.hpp"

#include <cmath>
#include <random>

#include "awr/exact_riemann.hpp"
#include "doctest.h"

using namespace awr;

namespace {

const EosParams kUnit(1.0, 0.0, 1.0, 2.0, 1.0);      // p'(1) = 3 exactly
const EosParams kCaseI(1.0, 0.01, 1.0, 2.0, 0.25);
const EosParams kCaseIII(1.0, 0.01, 1.0, 2.0, 0.5);

EosParams random_params(std::mt19937& gen) {
  std::uniform_real_distribution<double> uA(0.05, 2.0);
  std::uniform_real_distribution<double> ua(0.001, 0.1);
  std::uniform_real_distribution<double> uB(0.5, 2.0);
  std::uniform_real_distribution<double> uG(1.0, 3.0);
  std::uniform_real_distribution<double> uk(0.1, 1.0);
  return {uA(gen), ua(gen), uB(gen), uG(gen), uk(gen)};
}

State random_state(std::mt19937& gen) {
  std::uniform_real_distribution<double> urho(0.05, 5.0);
  std::uniform_real_distribution<double> uv(0.0, 10.0);
  return {urho(gen), uv(gen)};
}

Field uniform_field(const Grid& grid, const State& s) {
  Field f{grid, std::vector<double>(grid.n_cells, s.rho),
          std::vector<double>(grid.n_cells, s.v), 0.0};
  return f;
}

double l1_distance(const EosParams& p, const RiemannSolution& exact, const Field& f) {
  double sum = 0.0;
  for (int j = 0; j < f.grid.n_cells; ++j) {
    sum += std::abs(f.rho[j] - sample(p, exact, f.grid.center(j) / f.time).rho);
  }
  return sum * f.grid.dx();
}

}  // namespace

TEST_SUITE_BEGIN("upwind_scheme");

TEST_CASE("grid validation and geometry") {
  CHECK_THROWS_AS(Grid(1.0, -1.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(Grid(-1.0, 1.0, 2), std::invalid_argument);
  const Grid g(-1.0, 1.0, 4);
  CHECK(g.dx() == 0.5);
  CHECK(g.center(0) == -0.75);
  CHECK(g.center(3) == 0.75);
}

TEST_CASE("coefficient_matrix values") {
  const Mat2 b = coefficient_matrix(kUnit, {1.0, 5.0});
  CHECK(b.m00 == 5.0);
  CHECK(b.m01 == 1.0);
  CHECK(b.m10 == 0.0);
  CHECK(b.m11 == 2.0);

  // Zero velocity: B = [[0, rho], [0, -rho p']].
  const Mat2 z = coefficient_matrix(kUnit, {2.0, 0.0});
  CHECK(z.m00 == 0.0);
  CHECK(z.m01 == 2.0);
  CHECK(z.m11 == doctest::Approx(-2.0 * pressure_derivative(kUnit, 2.0)).epsilon(1e-14));

  // Upper triangular: the diagonal carries (lambda2, lambda1).
  std::mt19937 gen(7);
  for (int i = 0; i < 20; ++i) {
    const EosParams p = random_params(gen);
    const State s = random_state(gen);
    const Mat2 m = coefficient_matrix(p, s);
    CHECK(m.m00 == doctest::Approx(lambda2(s)).epsilon(1e-12));
    CHECK(m.m11 == doctest::Approx(lambda1(p, s)).epsilon(1e-12));
  }
}

TEST_CASE("eigendecomposition reconstructs B and inverts exactly") {
  const Eigensystem e = eigendecomposition(kUnit, {1.0, 5.0});
  CHECK(e.Lambda.m00 == 5.0);
  CHECK(e.Lambda.m11 == 2.0);

  std::mt19937 gen(11);
  for (int i = 0; i < 100; ++i) {
    const EosParams p = random_params(gen);
    const State s = random_state(gen);
    const Mat2 b = coefficient_matrix(p, s);
    const Eigensystem sys = eigendecomposition(p, s);
    const Mat2 rl = sys.R * sys.L;
    CHECK((rl - Mat2::identity()).max_abs() <= 1e-12);
    const Mat2 rec = sys.R * sys.Lambda * sys.L;
    CHECK((rec - b).max_abs() <= 1e-12 * b.max_abs());
  }
}

TEST_CASE("split: signs, sums and one-sided limits") {
  std::mt19937 gen(13);
  for (int i = 0; i < 100; ++i) {
    const EosParams p = random_params(gen);
    const State s = random_state(gen);
    const Mat2 b = coefficient_matrix(p, s);
    const auto [bp, bm] = split(p, s);
    CHECK((bp + bm - b).max_abs() <= 1e-12 * std::max(1.0, b.max_abs()));
    // Both parts stay upper triangular; eigenvalues are (lam +- |lam|)/2.
    const double l1 = lambda1(p, s), l2 = lambda2(s);
    CHECK(bp.m00 == doctest::Approx(0.5 * (l2 + std::abs(l2))).epsilon(1e-12));
    CHECK(bm.m11 ==
          doctest::Approx(0.5 * (l1 - std::abs(l1))).scale(1.0).epsilon(1e-12));
  }

  // Supersonic state: both speeds positive, B_minus vanishes.
  const State fast{1.0, 9.0};
  CHECK(lambda1(kUnit, fast) > 0.0);
  const auto [bp, bm] = split(kUnit, fast);
  const Mat2 b = coefficient_matrix(kUnit, fast);
  CHECK(bm.max_abs() <= 1e-12 * b.max_abs());

  // Mixed signs: B_plus carries (lambda2, 0), B_minus carries (0, lambda1).
  const State mixed{1.0, 1.0};
  const double l1 = lambda1(kUnit, mixed);
  REQUIRE(l1 < 0.0);
  const auto [mp, mm] = split(kUnit, mixed);
  CHECK(mp.m00 == doctest::Approx(lambda2(mixed)).epsilon(1e-12));
  CHECK(std::abs(mp.m11) <= 1e-12);
  CHECK(std::abs(mm.m00) <= 1e-12);
  CHECK(mm.m11 == doctest::Approx(l1).epsilon(1e-12));
}

TEST_CASE("stable_dt") {
  const Grid g(-1.0, 1.0, 100);
  CHECK(stable_dt(kUnit, uniform_field(g, {1.0, 5.0}), 0.5) ==
        doctest::Approx(0.5 * g.dx() / 5.0).epsilon(1e-14));

  // At rest with A = 0, kappa = 1: |lambda1| = B/rho^kappa = 1.
  const EosParams chap(0.0, 0.0, 1.0, 2.0, 1.0);
  CHECK(stable_dt(chap, uniform_field(g, {1.0, 0.0}), 0.5) ==
        doctest::Approx(0.5 * g.dx()).epsilon(1e-14));

  CHECK_THROWS_AS(stable_dt(kUnit, uniform_field(g, {1.0, 5.0}), 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(stable_dt(kUnit, uniform_field(g, {1.0, 5.0}), 1.5),
                  std::invalid_argument);
}

TEST_CASE("step: constant fields are exact fixed points") {
  const Grid g(-1.0, 1.0, 64);
  const Field f = uniform_field(g, {1.7, 3.2});
  const Field g1 = step(kCaseI, f, 1e-3);
  for (int j = 0; j < g.n_cells; ++j) {
    CHECK(g1.rho[j] == 1.7);
    CHECK(g1.v[j] == 3.2);
  }
  CHECK(g1.time == doctest::Approx(1e-3));
}

TEST_CASE("step: stencil width one around the initial jump") {
  const Grid g(-1.0, 1.0, 64);
  Field f = uniform_field(g, {1.0, 5.0});
  for (int j = g.n_cells / 2; j < g.n_cells; ++j) f.v[j] = 2.0;  // jump at x = 0
  const double dt = stable_dt(kCaseI, f, 0.5);
  const Field g1 = step(kCaseI, f, dt);
  for (int j = 0; j < g.n_cells; ++j) {
    const bool adjacent = (j == g.n_cells / 2 - 1) || (j == g.n_cells / 2);
    if (!adjacent) {
      CHECK(g1.rho[j] == f.rho[j]);
      CHECK(g1.v[j] == f.v[j]);
    }
  }
}

TEST_CASE("step: upwind consistency when all speeds are positive") {
  // All-positive eigenvalues reduce the update to the backward difference
  // U_j - dt/dx * B (U_j - U_{j-1}).
  const Grid g(-1.0, 1.0, 32);
  Field f = uniform_field(g, {1.0, 9.0});
  for (int j = 0; j < g.n_cells; ++j) f.rho[j] += 0.05 * std::sin(0.3 * j);
  REQUIRE(lambda1(kUnit, {1.05, 9.0}) > 0.0);

  const double dt = stable_dt(kUnit, f, 0.5);
  const Field stepped = step(kUnit, f, dt);
  for (int j = 1; j < g.n_cells; ++j) {
    const Mat2 b = coefficient_matrix(kUnit, f.state(j));
    const double dr = f.rho[j] - f.rho[j - 1];
    const double dv = f.v[j] - f.v[j - 1];
    const double rho_ref = f.rho[j] - dt / g.dx() * (b.m00 * dr + b.m01 * dv);
    const double v_ref = f.v[j] - dt / g.dx() * (b.m10 * dr + b.m11 * dv);
    CHECK(stepped.rho[j] == doctest::Approx(rho_ref).epsilon(1e-12));
    CHECK(stepped.v[j] == doctest::Approx(v_ref).epsilon(1e-12));
  }
}

TEST_CASE("step: upwind consistency when all speeds are negative") {
  // Dual statement: the update becomes the forward difference
  // U_j - dt/dx * B (U_{j+1} - U_j). Intermediate states may carry v < 0
  // even though initial data may not.
  const Grid g(-1.0, 1.0, 32);
  Field f = uniform_field(g, {1.0, -9.0});
  for (int j = 0; j < g.n_cells; ++j) f.rho[j] += 0.05 * std::sin(0.3 * j);
  REQUIRE(lambda2(State{1.0, -9.0}) < 0.0);

  const double dt = stable_dt(kUnit, f, 0.5);
  const Field stepped = step(kUnit, f, dt);
  for (int j = 0; j + 1 < g.n_cells; ++j) {
    const Mat2 b = coefficient_matrix(kUnit, f.state(j));
    const double dr = f.rho[j + 1] - f.rho[j];
    const double dv = f.v[j + 1] - f.v[j];
    const double rho_ref = f.rho[j] - dt / g.dx() * (b.m00 * dr + b.m01 * dv);
    const double v_ref = f.v[j] - dt / g.dx() * (b.m10 * dr + b.m11 * dv);
    CHECK(stepped.rho[j] == doctest::Approx(rho_ref).epsilon(1e-12));
    CHECK(stepped.v[j] == doctest::Approx(v_ref).epsilon(1e-12));
  }
}

TEST_CASE("step: blow-up is reported, not clamped") {
  const Grid g(-1.0, 1.0, 64);
  Field f = uniform_field(g, {1.0, 5.0});
  for (int j = g.n_cells / 2; j < g.n_cells; ++j) f.v[j] = 2.0;

  // A grossly oversized step drives the cell next to the jump past the 1/a
  // density cap; the scheme must abort with the offending cell, not clamp.
  try {
    for (int n = 0; n < 10; ++n) f = step(kCaseI, f, 1e6);
    FAIL("expected BlowUpError");
  } catch (const BlowUpError& e) {
    CHECK(e.cell >= g.n_cells / 2 - 1);
    CHECK(e.cell <= g.n_cells / 2 + 1);
    CHECK(std::string(e.what()).find("blow-up") != std::string::npos);
  }
}

TEST_CASE("run: trivial data stay constant to machine precision") {
  const Grid g(-1.0, 1.0, 64);
  const Field f = run(kCaseI, {1.0, 5.0}, {1.0, 5.0}, g, {0.5, 0.05, 100000});
  for (int j = 0; j < g.n_cells; ++j) {
    CHECK(f.rho[j] == 1.0);
    CHECK(f.v[j] == 5.0);
  }
}

TEST_CASE("run: validation") {
  const SchemeConfig cfg{0.5, 0.05, 100000};
  CHECK_THROWS_AS(run(kCaseI, {1.0, 5.0}, {1.0, 2.0}, Grid(1.0, 2.0, 64), cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(run(kCaseI, {1.0, -5.0}, {1.0, 2.0}, Grid(-1.0, 1.0, 64), cfg),
                  std::domain_error);
  CHECK_THROWS_AS(run(kCaseI, {1.0, 5.0}, {1.0, 2.0}, Grid(-1.0, 1.0, 64),
                      SchemeConfig{0.5, 0.05, 3}),
                  MaxStepsError);
}

TEST_CASE("run: shock compression raises the density above both sides") {
  const Grid g(-1.0, 1.0, 400);
  const Field f = run(kCaseI, {1.0, 5.0}, {1.0, 2.0}, g, {0.5, 0.1, 100000});
  double max_rho = 0.0;
  for (double r : f.rho) max_rho = std::max(max_rho, r);
  CHECK(max_rho > 1.0);
  CHECK(f.time == doctest::Approx(0.1).epsilon(1e-9));
}

TEST_CASE("run: L1 error against the exact sampler shrinks with the grid") {
  const State left{1.0, 5.0}, right{2.0, 7.0};
  const RiemannSolution exact = solve(kCaseIII, left, right);
  const Field coarse = run(kCaseIII, left, right, Grid(-1.0, 1.0, 100), {0.5, 0.1, 100000});
  const Field fine = run(kCaseIII, left, right, Grid(-1.0, 1.0, 200), {0.5, 0.1, 100000});
  const double e_coarse = l1_distance(kCaseIII, exact, coarse);
  const double e_fine = l1_distance(kCaseIII, exact, fine);
  CHECK(e_fine < e_coarse);
}

TEST_CASE("run: no blow-up over 1000+ steps on the three reference cases") {
  const Grid g(-1.0, 1.0, 800);
  const SchemeConfig cfg{0.5, 0.3, 1000000};
  CHECK_NOTHROW(run(kCaseI, {1.0, 5.0}, {1.0, 2.0}, g, cfg));
  CHECK_NOTHROW(run(EosParams(1.0, 0.01, 1.0, 2.0, 0.5), {2.0, 5.0}, {1.0, 4.5}, g, cfg));
  CHECK_NOTHROW(run(kCaseIII, {1.0, 5.0}, {2.0, 7.0}, g, cfg));
}

TEST_SUITE_END();

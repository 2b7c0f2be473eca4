#include "awr/eos.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"

using namespace awr;

TEST_SUITE_BEGIN("eos");

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(EosParams(0.0, 0.0, 1.0, 2.0, 1.0));  // generalized Chaplygin point
  CHECK_NOTHROW(EosParams(1.0, 0.01, 1.0, 2.0, 0.25));
  CHECK_THROWS_AS(EosParams(-1.0, 0.0, 1.0, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(EosParams(1.0, -0.1, 1.0, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(EosParams(1.0, 0.0, 0.0, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(EosParams(1.0, 0.0, -1.0, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(EosParams(1.0, 0.0, 1.0, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(EosParams(1.0, 0.0, 1.0, 3.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(EosParams(1.0, 0.0, 1.0, 2.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(EosParams(1.0, 0.0, 1.0, 2.0, 1.5), std::invalid_argument);
}

TEST_CASE("pressure point values") {
  // Generalized Chaplygin with unit values: p(1) = -B.
  CHECK(pressure(EosParams(0.0, 0.0, 1.0, 2.0, 1.0), 1.0) == -1.0);
  // Exact cancellation: 1 - 1.
  CHECK(pressure(EosParams(1.0, 0.0, 1.0, 2.0, 1.0), 1.0) == 0.0);
  // Frozen from the extended-precision oracle.
  const EosParams p(1.0, 0.01, 1.0, 2.0, 0.25);
  CHECK(pressure(p, 1.0) == doctest::Approx(0.02030405060708091).epsilon(1e-9));
  CHECK(static_cast<double>(oracle::pressure(1.0L, 0.01L, 1.0L, 2.0L, 0.25L, 1.0L)) ==
        doctest::Approx(0.02030405060708091).epsilon(1e-12));
}

TEST_CASE("pressure domain errors") {
  const EosParams p(1.0, 0.01, 1.0, 2.0, 0.25);
  CHECK_THROWS_AS(pressure(p, 0.0), std::domain_error);
  CHECK_THROWS_AS(pressure(p, -1.0), std::domain_error);
  CHECK_THROWS_AS(pressure(p, 100.0), std::domain_error);  // 1/a pole
  CHECK_THROWS_AS(pressure(p, 150.0), std::domain_error);
  CHECK_NOTHROW(pressure(p, 99.9));
}

TEST_CASE("pressure_derivative point values and finite differences") {
  const EosParams p1(1.0, 0.0, 1.0, 2.0, 1.0);
  CHECK(pressure_derivative(p1, 1.0) == doctest::Approx(3.0).epsilon(1e-14));
  const double fd1 =
      oracle::central_diff([&](double r) { return pressure(p1, r); }, 1.0, 1e-6);
  CHECK(pressure_derivative(p1, 1.0) == doctest::Approx(fd1).epsilon(1e-6));

  const EosParams p2(0.0, 0.0, 1.0, 2.0, 0.5);
  CHECK(pressure_derivative(p2, 4.0) == doctest::Approx(0.0625).epsilon(1e-14));
  const double fd2 =
      oracle::central_diff([&](double r) { return pressure(p2, r); }, 4.0, 1e-6);
  CHECK(pressure_derivative(p2, 4.0) == doctest::Approx(fd2).epsilon(1e-6));
}

TEST_CASE("characteristic speeds") {
  const EosParams p(1.0, 0.0, 1.0, 2.0, 1.0);
  const State s{1.0, 5.0};
  CHECK(lambda1(p, s) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(lambda2(s) == 5.0);

  // A = 0: lambda1 = v - kappa*B/rho^kappa drops without bound as rho -> 0.
  const EosParams chap(0.0, 0.0, 1.0, 2.0, 0.5);
  const double l2 = lambda1(chap, {1e-2, 1.0});
  const double l4 = lambda1(chap, {1e-4, 1.0});
  const double l6 = lambda1(chap, {1e-6, 1.0});
  CHECK(l2 > l4);
  CHECK(l4 > l6);
}

TEST_CASE("rarefaction_slope point values") {
  CHECK(rarefaction_slope(EosParams(1.0, 0.0, 1.0, 2.0, 1.0), 1.0) ==
        doctest::Approx(-6.0).epsilon(1e-14));
  CHECK(rarefaction_slope(EosParams(0.0, 0.0, 1.0, 2.0, 1.0), 2.7) == 0.0);
  CHECK(rarefaction_slope(EosParams(0.0, 0.0, 1.0, 2.0, 0.5), 1.0) ==
        doctest::Approx(-0.25).epsilon(1e-14));
}

TEST_CASE("rarefaction_slope equals the lambda1 slope along the wave curve") {
  // d(lambda1)/d(rho) with v(rho) = C - p(rho), by finite difference.
  const EosParams p(1.0, 0.0, 1.0, 2.0, 1.0);
  auto lam_on_curve = [&](double rho) {
    return -pressure(p, rho) - rho * pressure_derivative(p, rho);
  };
  const double fd = oracle::central_diff(lam_on_curve, 1.0, 1e-6);
  CHECK(rarefaction_slope(p, 1.0) == doctest::Approx(fd).epsilon(1e-6));
}

namespace {

EosParams random_params(std::mt19937& gen) {
  std::uniform_real_distribution<double> uA(0.1, 2.0);
  std::uniform_real_distribution<double> ua(0.001, 0.1);
  std::uniform_real_distribution<double> uB(0.5, 2.0);
  std::uniform_real_distribution<double> uG(1.0, 3.0);
  std::uniform_real_distribution<double> uk(0.1, 1.0);
  return {uA(gen), ua(gen), uB(gen), uG(gen), uk(gen)};
}

}  // namespace

TEST_CASE("pressure is strictly increasing in rho") {
  std::mt19937 gen(2024);
  std::uniform_real_distribution<double> urho(0.1, 5.0);
  for (int i = 0; i < 100; ++i) {
    const EosParams p = random_params(gen);
    double r1 = urho(gen), r2 = urho(gen);
    if (r1 == r2) continue;
    if (r1 > r2) std::swap(r1, r2);
    CHECK(pressure(p, r1) < pressure(p, r2));
  }
}

TEST_CASE("pressure spans both signs between the domain ends") {
  const EosParams p(1.0, 0.01, 1.0, 2.0, 0.25);
  CHECK(pressure(p, 1e-8) < 0.0);
  CHECK(pressure(p, (1.0 / p.a) * (1.0 - 1e-8)) > 0.0);
}

TEST_CASE("pressure_derivative agrees with central differences") {
  std::mt19937 gen(77);
  std::uniform_real_distribution<double> urho(0.1, 5.0);
  for (int i = 0; i < 100; ++i) {
    const EosParams p = random_params(gen);
    const double rho = urho(gen);
    const double h = 1e-5 * rho;
    const double fd =
        oracle::central_diff([&](double r) { return pressure(p, r); }, rho, h);
    CHECK(pressure_derivative(p, rho) == doctest::Approx(fd).epsilon(1e-5));
    CHECK(pressure_derivative(p, rho) > 0.0);
  }
}

TEST_CASE("rarefaction_slope closed form equals -2p' - rho p''") {
  std::mt19937 gen(99);
  std::uniform_real_distribution<double> urho(0.2, 4.0);
  for (int i = 0; i < 100; ++i) {
    const EosParams p = random_params(gen);
    const double rho = urho(gen);
    const double h = 1e-5 * rho;
    const double pdd = oracle::central_diff(
        [&](double r) { return pressure_derivative(p, r); }, rho, h);
    const double reference = -2.0 * pressure_derivative(p, rho) - rho * pdd;
    CHECK(rarefaction_slope(p, rho) == doctest::Approx(reference).epsilon(1e-4));
    CHECK(rarefaction_slope(p, rho) < 0.0);
  }
}

TEST_CASE("strict hyperbolicity: lambda1 < lambda2") {
  std::mt19937 gen(31337);
  std::uniform_real_distribution<double> urho(0.05, 5.0);
  std::uniform_real_distribution<double> uv(0.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    const EosParams p = random_params(gen);
    const State s{urho(gen), uv(gen)};
    CHECK(lambda1(p, s) < lambda2(s));
  }
}

TEST_SUITE_END();

#include "awr/eos.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace awr {

namespace {

constexpr double kPoleGuard = 1e-12;  // relative clearance kept from rho = 1/a
constexpr double kRhoFloor = 1e-100;

void check_density(const EosParams& p, double rho) {
  if (!p.admissible(rho)) {
    throw std::domain_error("density " + std::to_string(rho) +
                            " outside the admissible domain (0, 1/a)");
  }
}

}  // namespace

EosParams::EosParams(double A_, double a_, double B_, double Gamma_, double kappa_)
    : A(A_), a(a_), B(B_), Gamma(Gamma_), kappa(kappa_) {
  if (!(A >= 0.0)) throw std::invalid_argument("EosParams: A must be >= 0");
  if (!(a >= 0.0)) throw std::invalid_argument("EosParams: a must be >= 0");
  if (!(B > 0.0)) throw std::invalid_argument("EosParams: B must be > 0");
  if (!(Gamma >= 1.0 && Gamma <= 3.0))
    throw std::invalid_argument("EosParams: Gamma must lie in [1, 3]");
  if (!(kappa > 0.0 && kappa <= 1.0))
    throw std::invalid_argument("EosParams: kappa must lie in (0, 1]");
}

double EosParams::rho_min() const { return kRhoFloor; }

double EosParams::rho_sup() const {
  if (a == 0.0) return std::numeric_limits<double>::infinity();
  return (1.0 / a) * (1.0 - kPoleGuard);
}

bool EosParams::admissible(double rho) const {
  return rho >= rho_min() && rho <= rho_sup();
}

bool admissible(const EosParams& p, const State& s) {
  return p.admissible(s.rho) && std::isfinite(s.v);
}

double pressure(const EosParams& p, double rho) {
  check_density(p, rho);
  return p.A * std::pow(rho / (1.0 - p.a * rho), p.Gamma) -
         p.B / std::pow(rho, p.kappa);
}

double pressure_derivative(const EosParams& p, double rho) {
  check_density(p, rho);
  const double excluded = 1.0 - p.a * rho;
  return p.Gamma * p.A * std::pow(rho, p.Gamma - 1.0) / std::pow(excluded, p.Gamma + 1.0) +
         p.kappa * p.B / std::pow(rho, p.kappa + 1.0);
}

double lambda1(const EosParams& p, const State& s) {
  return s.v - s.rho * pressure_derivative(p, s.rho);
}

double lambda2(const State& s) { return s.v; }

double rarefaction_slope(const EosParams& p, double rho) {
  check_density(p, rho);
  const double excluded = 1.0 - p.a * rho;
  return -(p.Gamma * p.Gamma + p.Gamma) * p.A * std::pow(rho, p.Gamma - 1.0) /
             std::pow(excluded, p.Gamma + 2.0) +
         (p.kappa * p.kappa - p.kappa) * p.B / std::pow(rho, p.kappa + 1.0);
}

}  // namespace awr

#ifndef AWR_EOS_HPP
#define AWR_EOS_HPP

namespace awr {

/// Parameters of the extended Chaplygin equation of state
///
///     p(rho) = A * (rho / (1 - a*rho))^Gamma - B / rho^kappa
///
/// The van der Waals excluded volume `a` caps the density at rho_max = 1/a
/// (p -> +inf there when A > 0); the Chaplygin term drives p -> -inf as
/// rho -> 0. A = 0 reduces to the generalized Chaplygin gas p = -B/rho^kappa,
/// and a = 0 removes the density cap; both are admitted as exact values.
struct EosParams {
  double A;      // van der Waals pressure scale, >= 0
  double a;      // excluded volume, >= 0
  double B;      // Chaplygin coefficient, > 0
  double Gamma;  // adiabatic exponent, in [1, 3]
  double kappa;  // Chaplygin exponent, in (0, 1]

  // Throws std::invalid_argument when a constraint above is violated.
  EosParams(double A, double a, double B, double Gamma, double kappa);

  // Guarded admissible density interval [rho_min, rho_sup]. The upper end
  // stays a relative 1e-12 clear of the 1/a pole (+inf when a = 0); the
  // lower end is a tiny positive floor that keeps B/rho^kappa finite.
  double rho_min() const;
  double rho_sup() const;
  bool admissible(double rho) const;
};

/// A (density, velocity) pair; the primitive unknown of the system.
struct State {
  double rho;
  double v;
};

// True when s.rho lies in the guarded density domain and s.v is finite.
// Nonnegativity of v is a property of initial data, not of intermediate
// states, so it is not checked here.
bool admissible(const EosParams& p, const State& s);

// p(rho). Throws std::domain_error outside the admissible density domain.
double pressure(const EosParams& p, double rho);

// dp/drho = Gamma*A*rho^(Gamma-1)/(1-a*rho)^(Gamma+1) + kappa*B/rho^(kappa+1).
// Strictly positive on the admissible domain: p is invertible there.
double pressure_derivative(const EosParams& p, double rho);

// Characteristic speeds of the system. lambda1 < lambda2 always
// (strict hyperbolicity); the lambda2 field carries contact discontinuities.
double lambda1(const EosParams& p, const State& s);  // v - rho * p'(rho)
double lambda2(const State& s);                      // v

// d(lambda1)/d(rho) along the wave curve v(rho) = v_l + p_l - p(rho):
//   -(Gamma^2+Gamma)*A*rho^(Gamma-1)/(1-a*rho)^(Gamma+2)
//     + (kappa^2-kappa)*B/rho^(kappa+1)
// Equals -2 p'(rho) - rho p''(rho); always <= 0, strictly negative unless
// A = 0 and kappa = 1.
double rarefaction_slope(const EosParams& p, double rho);

}  // namespace awr

#endif  // AWR_EOS_HPP

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eigenbound/geometry.hpp"
#include "eigenbound/ode.hpp"
#include "eigenbound/quadrature.hpp"

namespace eigenbound {

enum class BoundaryCondition { Dirichlet, Neumann };

/// f'' + F f' = -lambda w f on (0, right_end), with w = 1 unless given.
struct EigenProblem {
  RealFunction drift;
  RealFunction weight;  // empty means w = 1
  BoundaryCondition left = BoundaryCondition::Dirichlet;
  BoundaryCondition right = BoundaryCondition::Neumann;
  double right_end = 1.0;
};

struct SolverOptions {
  double tol = 1e-12;     // relative tolerance on lambda
  double rk_tol = 1e-11;  // integrator rtol and atol
  /// Upper end of the initial lambda scan. Without it the scan starts at 40
  /// and doubles until a sign change appears.
  std::optional<double> scan_upper;
  int scan_steps = 64;
};

struct EigenResult {
  double lambda = 0.0;
  /// Boundary functional at the far end for the returned lambda.
  double boundary_mismatch = 0.0;
  int iterations = 0;
  /// Accepted integrator steps of the final solve (f and f'),
  /// normalised by f'(0) = 1 (Dirichlet left) or f(0) = 1 (Neumann left).
  std::vector<double> r;
  std::vector<double> f_nodes;
  std::vector<double> df_nodes;
  OdeSolution solution;

  [[nodiscard]] double f(double x) const { return solution.at(x)[0]; }
  [[nodiscard]] double df(double x) const { return solution.at(x)[1]; }
};

/// Principal eigenvalue by shooting: scan lambda for the first sign change of
/// the far boundary functional, then Illinois iteration. Checks that the
/// eigenfunction has no interior zero.
/// Throws NoBracket when no sign change is found and StiffIntegration when
/// the integrator fails.
EigenResult principal_eigenvalue(const EigenProblem& problem, const SolverOptions& options = {});

/// The drift (d-1) alpha tanh(alpha r), i.e. -(d-1)|alpha| tan(|alpha| r) for K > 0.
double reduced_drift(int d, const Alpha& alpha, double r);
/// Its derivative (d-1) alpha^2 sech^2(alpha r).
double reduced_drift_derivative(int d, const Alpha& alpha, double r);

/// d^2/dr^2 + F d/dr, Dirichlet at 0 and Neumann at 1.
EigenProblem primal_problem(int d, const Alpha& alpha);
/// d^2/dr^2 - F d/dr, Neumann at 0 and Dirichlet at 1.
EigenProblem dual_problem(int d, const Alpha& alpha);
/// d^2/dr^2 - 2 beta r d/dr, Dirichlet at 0 and Neumann at 1.
EigenProblem beta_problem(double beta);

EigenResult beta_eigenvalue(double beta, const SolverOptions& options = {});

/// lambda-bar, the principal eigenvalue of the reduced operator. The dual
/// problem is solved for K > 0 because its drift stays regular up to the
/// Myers limit; both problems share the principal eigenvalue.
EigenResult bar_lambda(int d, const Alpha& alpha, const SolverOptions& options = {});

/// Both sides of 4 s (1-s) int g'^2 = int (lambda + s F') g^2 for
/// g = (f')^(1/(2(1-s))), f the ground state of the primal problem.
struct GradientIdentityResult {
  double lambda = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // |lhs - rhs| / |lhs|
  double g_prime_at_0 = 0.0;
  double g_at_1 = 0.0;
};
GradientIdentityResult gradient_identity_residual(int d, const Alpha& alpha, double s, const SolverOptions& options = {});

/// The solved eigenfunction fed into both variational ratios.
struct VariationalConsistency {
  double lambda = 0.0;
  double primal_ratio = 0.0;
  double dual_ratio = 0.0;
  [[nodiscard]] double max_deviation() const;
  /// 4 lambda / D^2, the lambda_1 lower bound for diameter D.
  [[nodiscard]] double lambda1_lower(double D) const { return 4.0 * lambda / (D * D); }
};
VariationalConsistency variational_consistency(int d, const Alpha& alpha, const SolverOptions& options = {});

std::string to_string(BoundaryCondition bc);

}  // namespace eigenbound

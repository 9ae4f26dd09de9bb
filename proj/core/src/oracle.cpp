#include "eigenbound/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "eigenbound/errors.hpp"
#include "eigenbound/profile.hpp"
#include "eigenbound/universal.hpp"

namespace eigenbound {

namespace {

constexpr double kShortening = 1e-8;
constexpr double kRecordStep = 1.0 / 512.0;

struct Shooter {
  const EigenProblem& problem;
  OdeOptions ode;

  Rhs2 rhs(double lambda) const {
    return [this, lambda](double r, const State2& y) -> State2 {
      const double w = problem.weight ? problem.weight(r) : 1.0;
      return {y[1], -lambda * w * y[0] - problem.drift(r) * y[1]};
    };
  }

  State2 initial() const {
    return problem.left == BoundaryCondition::Dirichlet ? State2{0.0, 1.0} : State2{1.0, 0.0};
  }

  // Far-end functional, extrapolated to r = 1 when the domain is shortened.
  double target(double lambda, const OdeSolution& sol) const {
    const double gap = 1.0 - sol.t_final;
    const State2& y = sol.final;
    if (sol.blew_up) {
      const double v = problem.right == BoundaryCondition::Neumann ? y[1] : y[0];
      return std::copysign(1e150, v);
    }
    if (problem.right == BoundaryCondition::Dirichlet) return y[0] + gap * y[1];
    const State2 dy = rhs(lambda)(sol.t_final, y);
    return y[1] + gap * dy[1];
  }

  double shoot(double lambda) const {
    const OdeSolution sol = dopri5(rhs(lambda), 0.0, problem.right_end, initial(), ode, false);
    return target(lambda, sol);
  }
};

}  // namespace

std::string to_string(BoundaryCondition bc) { return bc == BoundaryCondition::Dirichlet ? "Dirichlet" : "Neumann"; }

EigenResult principal_eigenvalue(const EigenProblem& problem, const SolverOptions& options) {
  if (!problem.drift) throw DomainError("eigenproblem needs a drift");
  Shooter shooter{problem, OdeOptions{options.rk_tol, options.rk_tol, 0.0, 2000000, 1e150}};

  // Scan for the first sign change.
  double upper = options.scan_upper.value_or(40.0);
  const int steps = std::max(options.scan_steps, 4);
  double lo = 0.0;
  double f_lo = shooter.shoot(0.0);
  double hi = 0.0;
  double f_hi = f_lo;
  bool found = f_lo == 0.0;
  double scanned_to = 0.0;
  for (int round = 0; round < 24 && !found; ++round) {
    const double from = scanned_to;
    for (int i = 1; i <= steps; ++i) {
      const double lam = from + (upper - from) * i / steps;
      const double v = shooter.shoot(lam);
      if ((v > 0.0) != (f_lo > 0.0) || v == 0.0) {
        hi = lam;
        f_hi = v;
        found = true;
        break;
      }
      lo = lam;
      f_lo = v;
    }
    scanned_to = upper;
    upper *= 2.0;
  }
  if (!found) {
    std::ostringstream os;
    os << "no sign change of the boundary functional for lambda in [0, " << scanned_to << "]";
    throw NoBracket(os.str());
  }

  // Illinois iteration.
  EigenResult out;
  double lambda = f_hi == 0.0 ? hi : lo;
  if (f_lo != 0.0 && f_hi != 0.0) {
    int side = 0;
    for (int it = 0; it < 300; ++it) {
      ++out.iterations;
      lambda = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
      if (!(lambda > lo && lambda < hi)) lambda = 0.5 * (lo + hi);
      const double v = shooter.shoot(lambda);
      if (v == 0.0) break;
      if ((v > 0.0) == (f_hi > 0.0)) {
        hi = lambda;
        f_hi = v;
        if (side == -1) f_lo *= 0.5;
        side = -1;
      } else {
        lo = lambda;
        f_lo = v;
        if (side == 1) f_hi *= 0.5;
        side = 1;
      }
      if (hi - lo <= options.tol * std::max(1.0, std::abs(lambda))) break;
    }
    lambda = std::abs(f_lo) < std::abs(f_hi) ? lo : hi;
  }

  // Recording pass.
  OdeOptions rec = shooter.ode;
  rec.h_max = kRecordStep;
  out.lambda = lambda;
  out.solution = dopri5(shooter.rhs(lambda), 0.0, problem.right_end, shooter.initial(), rec, true);
  out.boundary_mismatch = shooter.target(lambda, out.solution);
  for (const auto& s : out.solution.samples) {
    out.r.push_back(s.t);
    out.f_nodes.push_back(s.y[0]);
    out.df_nodes.push_back(s.y[1]);
  }

  // Ground state: f keeps one sign strictly inside the interval. Where the
  // eigenfunction has decayed to round-off level its sign carries no information.
  double f_max = 0.0;
  for (double v : out.f_nodes) f_max = std::max(f_max, std::abs(v));
  const double noise = 1e-6 * f_max;
  for (std::size_t i = 1; i + 1 < out.f_nodes.size(); ++i) {
    if (!(out.f_nodes[i] > -noise)) {
      std::ostringstream os;
      os << "eigenfunction for lambda = " << lambda << " changes sign at r = " << out.r[i]
         << "; not the principal eigenvalue";
      throw NoConvergence(os.str());
    }
  }
  return out;
}

double reduced_drift(int d, const Alpha& alpha, double r) {
  if (d <= 1 || alpha.is_zero()) return 0.0;
  const double b = alpha.magnitude;
  if (alpha.sign == CurvatureSign::negative_K) return (d - 1) * b * std::tanh(b * r);
  const double x = b * r;
  // tan(x) = sin(x) / cos(x) with cos(x) = sin(pi/2 - x) near pi/2
  const double c = x <= 0.25 * kPi ? std::cos(x) : std::sin(kHalfPi - x);
  return -(d - 1) * b * std::sin(x) / c;
}

double reduced_drift_derivative(int d, const Alpha& alpha, double r) {
  if (d <= 1 || alpha.is_zero()) return 0.0;
  const double b = alpha.magnitude;
  const double x = b * r;
  if (alpha.sign == CurvatureSign::negative_K) {
    const double s = 1.0 / std::cosh(x);
    return (d - 1) * b * b * s * s;
  }
  const double c = x <= 0.25 * kPi ? std::cos(x) : std::sin(kHalfPi - x);
  return -(d - 1) * b * b / (c * c);
}

namespace {

double effective_end(const Alpha& alpha) {
  if (alpha.sign == CurvatureSign::positive_K && kHalfPi - alpha.magnitude < kShortening) {
    return 1.0 - kShortening;
  }
  return 1.0;
}

}  // namespace

EigenProblem primal_problem(int d, const Alpha& alpha) {
  EigenProblem p;
  p.drift = [d, alpha](double r) { return reduced_drift(d, alpha, r); };
  p.left = BoundaryCondition::Dirichlet;
  p.right = BoundaryCondition::Neumann;
  p.right_end = effective_end(alpha);
  return p;
}

EigenProblem dual_problem(int d, const Alpha& alpha) {
  EigenProblem p;
  p.drift = [d, alpha](double r) { return -reduced_drift(d, alpha, r); };
  p.left = BoundaryCondition::Neumann;
  p.right = BoundaryCondition::Dirichlet;
  p.right_end = effective_end(alpha);
  return p;
}

EigenProblem beta_problem(double beta) {
  EigenProblem p;
  p.drift = [beta](double r) { return -2.0 * beta * r; };
  p.left = BoundaryCondition::Dirichlet;
  p.right = BoundaryCondition::Neumann;
  return p;
}

EigenResult beta_eigenvalue(double beta, const SolverOptions& options) {
  return principal_eigenvalue(beta_problem(beta), options);
}

EigenResult bar_lambda(int d, const Alpha& alpha, const SolverOptions& options) {
  if (alpha.sign == CurvatureSign::positive_K) return principal_eigenvalue(dual_problem(d, alpha), options);
  return principal_eigenvalue(primal_problem(d, alpha), options);
}

GradientIdentityResult gradient_identity_residual(int d, const Alpha& alpha, double s, const SolverOptions& options) {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("gradient identity check needs s in (0, 1)");
  if (alpha.sign == CurvatureSign::positive_K && alpha.at_myers_limit()) {
    throw DomainError("gradient identity check needs |alpha| < pi/2");
  }
  GradientIdentityResult out;
  const EigenResult forward = principal_eigenvalue(primal_problem(d, alpha), options);
  const double lambda = forward.lambda;
  out.lambda = lambda;
  const double e = 0.5 / (1.0 - s);

  // Backward solve in t = 1 - r with f'(1) = 0 exactly: y(t) = f(1 - t).
  const Rhs2 back = [&](double t, const State2& y) -> State2 {
    return {y[1], -lambda * y[0] + reduced_drift(d, alpha, 1.0 - t) * y[1]};
  };
  OdeOptions ode{options.rk_tol, options.rk_tol, 1.0 / 512.0, 2000000, 1e150};
  const OdeSolution sol = dopri5(back, 0.0, 1.0, State2{1.0, 0.0}, ode, true);
  const double df0 = -sol.final[1];  // f'(0) of the backward solution
  if (!(df0 > 0.0)) throw DegenerateDerivative("eigenfunction derivative vanishes at r = 0");

  // f'(r), f''(r) at r = 1 - t, normalised by f'(0) = 1. Working in t keeps
  // full precision next to r = 1.
  auto derivs = [&](double t) {
    const State2 y = sol.at(t);
    const double fp = -y[1] / df0;
    const double f = y[0] / df0;
    const double fpp = -lambda * f - reduced_drift(d, alpha, 1.0 - t) * fp;
    return std::pair<double, double>{fp, fpp};
  };
  auto positive_slope = [](double fp) {
    if (!(fp > 0.0)) throw DegenerateDerivative("eigenfunction derivative vanishes inside (0, 1)");
  };
  auto g_sq = [&](double t) {
    const auto [fp, fpp] = derivs(t);
    positive_slope(fp);
    return std::pow(fp, 2.0 * e);
  };
  auto gp_sq = [&](double t) {
    const auto [fp, fpp] = derivs(t);
    positive_slope(fp);
    const double gp = e * std::pow(fp, e - 1.0) * fpp;
    return gp * gp;
  };
  auto rhs_integrand = [&](double t) {
    return (lambda + s * reduced_drift_derivative(d, alpha, 1.0 - t)) * g_sq(t);
  };

  const QuadratureOptions q{1e-13, 1e-12, 200000};
  // f' vanishes linearly at r = 1, so g'^2 behaves like t^(2e-2), singular for
  // s < 1/2. On t < 1/2 the substitution t = u^4 makes the integrand bounded.
  auto over_unit = [&](auto&& integrand) {
    const double far = integrate(integrand, 0.5, 1.0, q);
    const double near = integrate(
        [&](double u) {
          const double u2 = u * u;
          const double t = u2 * u2;
          if (t <= 0.0) return 0.0;
          return integrand(t) * 4.0 * u2 * u;
        },
        0.0, std::pow(0.5, 0.25), q);
    return far + near;
  };
  out.lhs = 4.0 * s * (1.0 - s) * over_unit(gp_sq);
  out.rhs = over_unit(rhs_integrand);
  out.residual = std::abs(out.lhs - out.rhs) / std::abs(out.lhs);

  // g'(0) = e f'(0)^(e-1) f''(0), with f''(0) = -lambda f(0) - F(0) f'(0).
  const auto [fp0, fpp0] = derivs(1.0);
  out.g_prime_at_0 = e * std::pow(fp0, e - 1.0) * fpp0;
  // g(1) from the forward solve, where f'(1) = 0 is only met approximately.
  const double fp1 = forward.df(forward.solution.t_final);
  out.g_at_1 = std::pow(std::abs(fp1), e);
  return out;
}

double VariationalConsistency::max_deviation() const {
  return std::max(std::abs(primal_ratio - lambda), std::abs(dual_ratio - lambda));
}

VariationalConsistency variational_consistency(int d, const Alpha& alpha, const SolverOptions& options) {
  VariationalConsistency out;
  const EigenResult eig = principal_eigenvalue(primal_problem(d, alpha), options);
  out.lambda = eig.lambda;
  const CoefficientProfile profile(d, alpha);
  // Primal: the eigenfunction itself. Dual: C f', the dual eigenfunction.
  out.primal_ratio = variational_ratio([&](double r) { return eig.f(r); }, profile, VariationalForm::primal);
  out.dual_ratio = variational_ratio([&](double r) { return profile.coeff(r) * eig.df(r); }, profile,
                                     VariationalForm::dual);
  return out;
}

}  // namespace eigenbound

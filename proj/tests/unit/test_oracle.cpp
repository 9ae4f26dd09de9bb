#include <gtest/gtest.h>

#include <cmath>

#include "eigenbound/errors.hpp"
#include "eigenbound/oracle.hpp"
#include "support/oracles.hpp"

using namespace eigenbound;

namespace {
constexpr double pi2_4 = kPi * kPi / 4.0;
}

TEST(Shooting, FlatEigenfunction) {
  const EigenResult r = bar_lambda(3, Alpha{});
  EXPECT_NEAR(r.lambda, pi2_4, 1e-10);
  EXPECT_LE(std::abs(r.boundary_mismatch), 1e-9);
  // f'(0) = 1 normalisation: f = (2/pi) sin(pi r/2)
  for (double x : {0.2, 0.5, 0.9}) EXPECT_NEAR(r.f(x), 2 / kPi * std::sin(kPi * x / 2), 1e-8);
  for (std::size_t i = 1; i < r.f_nodes.size(); ++i) EXPECT_GT(r.f_nodes[i], 0.0);
}

TEST(Shooting, BetaAnchors) {
  EXPECT_NEAR(beta_eigenvalue(0.0).lambda, pi2_4, 1e-8);
  const EigenResult half = beta_eigenvalue(0.5);
  EXPECT_NEAR(half.lambda, 3.0, 1e-8);
  for (double x : {0.3, 0.7, 1.0}) EXPECT_NEAR(half.f(x), x - x * x * x / 3, 1e-8);
  EXPECT_NEAR(beta_eigenvalue(-0.5).lambda, 2.0, 1e-8);
}

TEST(Shooting, BetaGapIsNonNegative) {
  for (int i = 1; i <= 25; ++i) {
    const double beta = 0.5 * i / 25.0;
    EXPECT_GE(beta_eigenvalue(beta).lambda - (pi2_4 + beta + (10 - 4 * pi2_4) * beta * beta), -1e-8) << beta;
  }
}

TEST(Shooting, AgreesWithFiniteDifferences) {
  for (int d : {2, 5}) {
    for (double x : {-3.0, -1.0, 0.5, 1.4}) {
      const double want = oracle::fd_eigenvalue(oracle::coefficient(d, x));
      EXPECT_NEAR(bar_lambda(d, Alpha::from_signed(x)).lambda, want, 1e-7 * std::max(1.0, want)) << d << " " << x;
    }
  }
  const double beta = 0.3;
  EXPECT_NEAR(beta_eigenvalue(beta).lambda,
              oracle::fd_eigenvalue([beta](double r) { return std::exp(-beta * r * r); }), 1e-8);
}

TEST(Shooting, Duality) {
  for (int d : {2, 3, 5, 10}) {
    for (double x : {-4.0, -2.0, -1.0, -0.3, 0.3, 0.8, 1.2, 1.5}) {
      const Alpha a = Alpha::from_signed(x);
      const double p = principal_eigenvalue(primal_problem(d, a)).lambda;
      const double q = principal_eigenvalue(dual_problem(d, a)).lambda;
      EXPECT_NEAR(p, q, 1e-9) << d << " " << x;
    }
  }
}

TEST(Shooting, HighDimensionMyersLimit) {
  EXPECT_NEAR(bar_lambda(63, Alpha::positive(kHalfPi)).lambda, 155.0, 1.0);
  // unit sphere S^d: lambda_1 = d, so bar_lambda = d pi^2/4
  for (int d : {2, 3, 4}) EXPECT_NEAR(bar_lambda(d, Alpha::positive(kHalfPi)).lambda, d * pi2_4, 1e-7) << d;
}

TEST(Shooting, ToleranceRefinementIsStable) {
  SolverOptions coarse;
  coarse.rk_tol = 1e-10;
  SolverOptions fine;
  fine.rk_tol = 1e-12;
  const Alpha a = Alpha::negative(2.0);
  EXPECT_NEAR(bar_lambda(4, a, coarse).lambda, bar_lambda(4, a, fine).lambda, 1e-9);
}

TEST(Shooting, NeumannGroundStateIsConstant) {
  EigenProblem p;
  p.drift = [](double r) { return -r; };
  p.left = BoundaryCondition::Neumann;
  p.right = BoundaryCondition::Neumann;
  EXPECT_NEAR(principal_eigenvalue(p).lambda, 0.0, 1e-12);
}

TEST(GradientIdentity, ResidualAndBoundaryValues) {
  for (int d : {2, 5}) {
    for (double m : {0.5, 1.0, 2.0}) {
      for (double s : {0.3, 0.5, 0.7}) {
        const auto r = gradient_identity_residual(d, Alpha::negative(m), s);
        EXPECT_LT(r.residual, 1e-6) << d << " " << m << " " << s;
        EXPECT_LT(std::abs(r.g_prime_at_0), 1e-6);
        EXPECT_LT(std::abs(r.g_at_1), 1e-6);
      }
    }
  }
  const auto flat = gradient_identity_residual(2, Alpha{}, 0.5);
  EXPECT_LT(flat.residual, 1e-8);
  EXPECT_THROW(gradient_identity_residual(2, Alpha{}, 1.0), DomainError);
}

TEST(VariationalConsistency, BothFormsRecoverTheEigenvalue) {
  const auto flat = variational_consistency(2, Alpha{});
  EXPECT_NEAR(flat.primal_ratio, pi2_4, 1e-6);
  EXPECT_NEAR(flat.dual_ratio, pi2_4, 1e-6);
  const auto neg = variational_consistency(2, Alpha::negative(2.0));
  EXPECT_NEAR(neg.primal_ratio, neg.dual_ratio, 1e-6);
  const auto pos = variational_consistency(5, Alpha::positive(1.0));
  EXPECT_LT(pos.max_deviation(), 1e-6);
  EXPECT_NEAR(pos.lambda1_lower(2.0), pos.lambda, 1e-15);
}

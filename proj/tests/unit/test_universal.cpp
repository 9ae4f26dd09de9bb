#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "eigenbound/errors.hpp"
#include "eigenbound/profile.hpp"
#include "eigenbound/universal.hpp"
#include "support/oracles.hpp"

using namespace eigenbound;

namespace {
constexpr double pi2_4 = kPi * kPi / 4.0;
}

TEST(Deltas, FlatWorkedExample) {
  const CoefficientProfile p(2, Alpha{});
  const BoundBracket b = delta_bracket(p);
  EXPECT_NEAR(b.delta, 0.25, 1e-12);
  EXPECT_NEAR(delta(p).argument, 0.5, 1e-6);
  EXPECT_NEAR(b.delta1, std::cbrt(5.0) / 4.0, 1e-9);
  EXPECT_NEAR(b.delta1_star, std::cbrt(5.0) / 4.0, 1e-9);
  EXPECT_NEAR(b.delta1_prime, 0.375, 1e-12);
  EXPECT_NEAR(b.delta1_star_prime, 0.375, 1e-12);
  EXPECT_NEAR(b.delta1, b.delta1_star, 1e-9);
  EXPECT_NEAR(b.delta1_prime, b.delta1_star_prime, 1e-9);
}

TEST(Deltas, MatchIndependentTables) {
  for (double x : {-3.0, -1.0, 0.5, 1.2}) {
    for (int d : {2, 4}) {
      const CoefficientProfile p(d, Alpha::from_signed(x));
      const BoundBracket b = delta_bracket(p);
      const oracle::Deltas o = oracle::deltas(d, x);
      const std::string where = "d=" + std::to_string(d) + " x=" + std::to_string(x);
      EXPECT_NEAR(b.delta, o.delta, 2e-6 * o.delta) << where;
      EXPECT_NEAR(b.delta1, o.delta1, 2e-6 * o.delta1) << where;
      EXPECT_NEAR(b.delta1_prime, o.delta1_prime, 2e-6 * o.delta1_prime) << where;
      EXPECT_NEAR(b.delta1_star, o.delta1_star, 2e-6 * o.delta1_star) << where;
      EXPECT_NEAR(b.delta1_star_prime, o.delta1_star_prime, 2e-6 * o.delta1_star_prime) << where;
    }
  }
}

TEST(Deltas, ChainAndBracketAgainstFiniteDifferences) {
  for (int d : {2, 3, 5, 10}) {
    for (double x : {-4.0, -2.0, -1.0, -0.5, -0.1, 0.0, 0.1, 0.4, 0.8, 1.1, 1.3, 1.5}) {
      const CoefficientProfile p(d, Alpha::from_signed(x));
      const BoundBracket b = delta_bracket(p);
      const double lam = oracle::fd_eigenvalue(oracle::coefficient(d, x), 2000);
      const std::string where = "d=" + std::to_string(d) + " x=" + std::to_string(x);
      EXPECT_LE(1.0 / (4.0 * b.delta), b.lower_for_barlambda + 1e-12) << where;
      EXPECT_LE(b.lower_for_barlambda, lam + 1e-6) << where;
      EXPECT_LE(lam, b.upper_for_barlambda + 1e-6) << where;
      EXPECT_LE(b.upper_for_barlambda, 1.0 / b.delta + 1e-12) << where;
    }
  }
}

TEST(Deltas, NearlyEqualForSmallPositiveCurvature) {
  for (double a = 0.05; a < 0.87; a += 0.1) {
    const CoefficientProfile p(2, Alpha::positive(a));
    const double ratio = delta1(p).value / delta1_star(p).value;
    EXPECT_GT(ratio, 0.99993) << a;
    EXPECT_LT(ratio, 1.0 + 1e-12) << a;
  }
}

TEST(Deltas, HalfPiEndpoint) {
  const CoefficientProfile p2(2, Alpha::positive(kHalfPi));
  const double d = delta(p2).value;
  EXPECT_TRUE(std::isfinite(d));
  EXPECT_LT(d, 0.25);
  const std::pair<int, double> ratios[] = {{2, 1.2}, {5, 1.27}, {63, 1.334}};
  for (const auto& [dim, want] : ratios) {
    const CoefficientProfile p(dim, Alpha::positive(kHalfPi));
    EXPECT_NEAR(delta1_star(p).value / delta1_star_prime(p).value, want, 0.01) << dim;
  }
}

TEST(Iterations, FlatCaseConverges) {
  const CoefficientProfile p(2, Alpha{});
  const IterationTrace lo = iterate_lower(p, 6);
  const IterationTrace up = iterate_upper(p, 6);
  ASSERT_EQ(lo.lower_sequence.size(), 6u);
  ASSERT_EQ(up.upper_sequence.size(), 6u);
  EXPECT_NEAR(lo.lower_sequence[0], std::cbrt(5.0) / 4.0, 1e-9);
  EXPECT_NEAR(up.upper_sequence[0], 0.375, 1e-9);
  EXPECT_NEAR(up.rayleigh_sequence[0], 0.375, 1e-9);
  for (int n = 1; n < 6; ++n) {
    EXPECT_GE(1.0 / lo.lower_sequence[n], 1.0 / lo.lower_sequence[n - 1] - 1e-9) << n;
    EXPECT_LE(1.0 / up.upper_sequence[n], 1.0 / up.upper_sequence[n - 1] + 1e-9) << n;
  }
  EXPECT_LE(1.0 / lo.lower_sequence[2], pi2_4 + 1e-9);
  EXPECT_GE(1.0 / up.upper_sequence[2], pi2_4 - 1e-9);
  EXPECT_NEAR(1.0 / lo.lower_sequence[3], pi2_4, 1e-3);
  EXPECT_NEAR(1.0 / lo.lower_sequence[5], pi2_4, 1e-3);
  EXPECT_NEAR(1.0 / up.upper_sequence[5], pi2_4, 1e-3);
}

TEST(Iterations, MonotoneOnCurvedProfiles) {
  for (double x : {-2.0, 1.0}) {
    const CoefficientProfile p(3, Alpha::from_signed(x));
    const IterationTrace lo = iterate_lower(p, 3);
    const IterationTrace up = iterate_upper(p, 3);
    const double lam = oracle::fd_eigenvalue(oracle::coefficient(3, x), 2000);
    for (int n = 1; n < 3; ++n) {
      EXPECT_GE(1.0 / lo.lower_sequence[n], 1.0 / lo.lower_sequence[n - 1] - 1e-9);
      EXPECT_LE(1.0 / up.upper_sequence[n], 1.0 / up.upper_sequence[n - 1] + 1e-9);
    }
    EXPECT_LE(1.0 / lo.lower_sequence.back(), lam + 1e-6);
    EXPECT_GE(1.0 / up.upper_sequence.back(), lam - 1e-6);
    EXPECT_NEAR(up.rayleigh_sequence[0], up.upper_sequence[0], 1e-6);
  }
}

TEST(VariationalRatio, ExactEigenfunctions) {
  const CoefficientProfile p(2, Alpha{});
  EXPECT_NEAR(variational_ratio([](double r) { return std::sin(kPi * r / 2); }, p, VariationalForm::primal), pi2_4,
              1e-8);
  EXPECT_NEAR(variational_ratio([](double r) { return std::cos(kPi * r / 2); }, p, VariationalForm::dual), pi2_4,
              1e-8);
  EXPECT_NEAR(variational_ratio([](double r) { return std::sqrt(r); }, p, VariationalForm::primal),
              4.0 / std::cbrt(5.0), 1e-8);
}

TEST(VariationalRatio, RandomPolynomialsStayBelowEigenvalue) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (double x : {-1.5, 0.0, 1.0}) {
    const CoefficientProfile p(3, Alpha::from_signed(x));
    const double lam = oracle::fd_eigenvalue(oracle::coefficient(3, x), 2000);
    for (int trial = 0; trial < 20; ++trial) {
      const double a = u(rng), b = u(rng), c = u(rng);
      // positive on (0, 1]: vanishes at 0 only for the primal form
      auto f = [=](double r) { return r * (a + b * r + c * r * r); };
      auto g = [=](double r) { return a + b * (1 - r) + c * (1 - r) * (1 - r) * r; };
      EXPECT_LE(variational_ratio(f, p, VariationalForm::primal), lam + 1e-6);
      EXPECT_LE(variational_ratio(g, p, VariationalForm::dual), lam + 1e-6);
    }
  }
}

TEST(VariationalRatio, RejectsNonPositiveFunctions) {
  const CoefficientProfile p(2, Alpha{});
  EXPECT_THROW(variational_ratio([](double r) { return r - 0.5; }, p, VariationalForm::primal), InvalidTestFunction);
  EXPECT_THROW(variational_ratio([](double) { return NAN; }, p, VariationalForm::dual), InvalidTestFunction);
}

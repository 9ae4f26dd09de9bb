#include <gtest/gtest.h>

#include <cmath>

#include "eigenbound/classical.hpp"
#include "eigenbound/correction.hpp"
#include "eigenbound/errors.hpp"
#include "support/oracles.hpp"

using namespace eigenbound;

namespace {
constexpr double pi2 = kPi * kPi;
}

TEST(MAlpha, AnchorsAndSigns) {
  EXPECT_NEAR(m_alpha(Alpha{}), 1.0, 1e-10);
  for (int i = 1; i <= 20; ++i) {
    EXPECT_LT(m_alpha(Alpha::negative(0.5 * i)), 1.0) << i;
    EXPECT_GT(m_alpha(Alpha::positive(1.57 * i / 20.0)), 1.0) << i;
  }
}

TEST(MAlpha, MatchesIntegratedByPartsForm) {
  for (double x : {-10.0, -4.0, -1.0, -0.2, 0.2, 0.9, 1.4, 1.55}) {
    EXPECT_NEAR(m_alpha(Alpha::from_signed(x)), oracle::m_alpha_by_parts(x), 1e-9) << x;
  }
}

TEST(MAlpha, EqualsScaledKernelAtZero) {
  for (double x : {-6.0, -2.0, -0.5, 0.5, 1.0, 1.5, 1.57}) {
    const Alpha a = Alpha::from_signed(x);
    EXPECT_NEAR(pi2 / 4.0 * HAlphaKernel(a).at_zero(), m_alpha(a), 1e-9) << x;
    EXPECT_NEAR(pi2 / 4.0 * HAlphaKernel(a)(0.0), m_alpha(a), 1e-9) << x;
  }
}

TEST(HAlpha, MatchesExplicitRepresentation) {
  for (double xa : {-3.0, -0.8, 0.7, 1.3}) {
    const HAlphaKernel k(Alpha::from_signed(xa));
    for (double x : {0.05, 0.3, 0.6, 0.9}) {
      EXPECT_NEAR(pi2 / 4.0 * k(x), oracle::h_alpha_scaled(xa, x), 1e-8) << xa << " " << x;
    }
  }
}

TEST(HAlpha, ExtremumAtZero) {
  const ExtremumCheck c = check_h_alpha_extremum(200, 200, 6.0, 1.57);
  EXPECT_TRUE(c.passed()) << "worst " << c.worst_violation << " at alpha " << to_string(c.worst_alpha) << " x "
                          << c.worst_x;
}

TEST(HAlpha, GeneralFormWithConstantCoefficient) {
  // a = 1: h reduces to 4/pi^2 everywhere.
  const Coefficient one{[](double) { return 1.0; }, [](double) { return 0.0; }, [](double) { return 0.0; }};
  for (double x : {0.0, 0.25, 0.5, 0.99, 1.0}) EXPECT_NEAR(h_general(one, x), 4.0 / pi2, 1e-12) << x;
  const Coefficient bad{[](double y) { return 0.5 - y; }, [](double) { return -1.0; }, [](double) { return 0.0; }};
  EXPECT_THROW(h_general(bad, 0.2), NonPositiveCoefficient);
}

TEST(HAlpha, UndefinedAtMyersLimit) {
  EXPECT_THROW(HAlphaKernel(Alpha::positive(kHalfPi)), DomainError);
}

TEST(Correction, ClampAboveAlpha0) {
  const double a0 = alpha0_root(3);
  const CorrectionResult below = correction(3, Alpha::positive(0.5 * a0));
  EXPECT_FALSE(below.clamped);
  const CorrectionResult above = correction(3, Alpha::positive(0.5 * (a0 + kHalfPi)));
  EXPECT_TRUE(above.clamped);
  EXPECT_NEAR(above.alpha_used.magnitude, a0, 1e-15);
  EXPECT_NEAR(above.m_alpha, m_alpha(Alpha::positive(a0)), 1e-15);
  EXPECT_FALSE(correction(3, Alpha::negative(5.0)).clamped);
}

TEST(Correction, CorrectedShiZhangImprovesInTheRightDirection) {
  for (double K : {-20.0, -5.0, -1.0}) {
    const GeometryTriple g{4, 1.0, K};
    EXPECT_GE(corrected_shi_zhang(g), shi_zhang(g) - 1e-12) << K;
  }
  // K M_alpha with the closed form
  const GeometryTriple g{3, 1.0, -2.0};
  EXPECT_NEAR(corrected_shi_zhang(g), shi_zhang_value(g.K * m_alpha(make_alpha(g)), g.D), 1e-12);
}

TEST(Combined, MiddleTermClosedForm) {
  for (double c : {-12.0, -9.0, -1.0, 0.0, 3.0, 9.8, 12.0, 25.0}) {
    const double brute = oracle::grid_max([&](double s) { return s * ((1 - s) * pi2 + c); }, 0.0, 1.0, 400000);
    EXPECT_NEAR(middle_term_closed(c), std::max(0.0, brute), 1e-7) << c;
  }
}

TEST(Combined, TakesTheLargestTerm) {
  const GeometryTriple sphere{2, kPi, 1.0};
  const CombinedResult s = combined_bound(sphere);
  EXPECT_EQ(s.winner, CombinedTerm::sphere);
  EXPECT_NEAR(s.value, 2.0, 1e-9);
  EXPECT_NEAR(s.sphere_term, pi2 / 2.0, 1e-9);

  const GeometryTriple flat{3, 1.0, 0.0};
  const CombinedResult f = combined_bound(flat);
  EXPECT_NEAR(f.value, pi2, 1e-9);
  EXPECT_NEAR(f.middle_term, pi2 / 4.0, 1e-12);
  ASSERT_TRUE(f.quadratic.has_value());

  for (double K : {-40.0, -3.0, 2.0, 8.0}) {
    const GeometryTriple g{5, 1.0, K};
    const CombinedResult r = combined_bound(g);
    const double best = std::max({r.delta1_star_term, r.middle_term, r.sphere_term});
    EXPECT_NEAR(r.value, 4.0 * best, 1e-12) << K;
    if (K > 0) EXPECT_GE(r.value, sphere_comparison(g) - 1e-12) << K;
  }
}

TEST(Combined, CrossoverWithQuadraticBound) {
  // D = 2 makes both sides lambda-bar scale.
  for (int d : {2, 3, 4, 5, 6, 7, 10, 12, 20}) {
    for (int i = 0; i <= 40; ++i) {
      const double K = -1.0 + 2.0 * i / 40.0;
      const GeometryTriple g{d, 2.0, K};
      const double middle = combined_middle_term(d, make_alpha(g));
      const double quadratic = quadratic_estimate(g);
      if (d <= 7) EXPECT_GE(middle, quadratic - 1e-9) << d << " " << K;
      else EXPECT_LE(middle, quadratic + 1e-9) << d << " " << K;
    }
  }
}

TEST(ConvexMean, GammaAnchors) {
  EXPECT_NEAR(gamma_zero(), (std::cbrt(25.0) - 5 * pi2 / 16) / (std::cbrt(25.0) - 10.0 / 3.0), 1e-15);
  EXPECT_NEAR(gamma_zero(), 0.39, 0.005);
  // at alpha = 0 the gamma_0 mean recovers pi^2/4 exactly
  const ConvexMean e = epsilon_mean(3, Alpha{}, MeanAnchor::at_zero);
  EXPECT_NEAR(e.epsilon, pi2 / 4.0, 1e-8);
  // at |alpha| = pi/2 the gamma_{pi/2} mean recovers d pi^2/4
  const ConvexMean h = epsilon_mean(4, Alpha::positive(kHalfPi), MeanAnchor::at_half_pi);
  EXPECT_NEAR(h.epsilon, 4 * pi2 / 4.0, 1e-8);
}

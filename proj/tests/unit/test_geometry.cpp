#include <gtest/gtest.h>

#include <cmath>

#include "eigenbound/errors.hpp"
#include "eigenbound/geometry.hpp"

using namespace eigenbound;

TEST(Alpha, FromTriple) {
  // alpha = (D/2) sqrt(|K|/(d-1))
  const Alpha a = make_alpha({2, 2.0, -4.0});
  EXPECT_EQ(a.sign, CurvatureSign::negative_K);
  EXPECT_DOUBLE_EQ(a.magnitude, 2.0);
  EXPECT_DOUBLE_EQ(a.square(), 4.0);

  const Alpha b = make_alpha({5, 1.0, 4.0});
  EXPECT_EQ(b.sign, CurvatureSign::positive_K);
  EXPECT_DOUBLE_EQ(b.magnitude, 0.5);
  EXPECT_DOUBLE_EQ(b.square(), -0.25);

  EXPECT_TRUE(make_alpha({3, 1.0, 0.0}).is_zero());
}

TEST(Alpha, MyersBound) {
  // Unit sphere: K = d - 1, D = pi gives |alpha| = pi/2 exactly.
  for (int d = 2; d <= 6; ++d) {
    const Alpha a = make_alpha({d, kPi, double(d - 1)});
    EXPECT_TRUE(a.at_myers_limit());
    EXPECT_LE(a.magnitude, kHalfPi);
  }
  EXPECT_THROW(make_alpha({2, 3.2, 1.0}), MyersViolation);
  EXPECT_THROW(Alpha::positive(1.6), MyersViolation);
  EXPECT_NO_THROW(Alpha::positive(kHalfPi + 1e-13));
}

TEST(Alpha, RoundTrips) {
  for (double x : {-5.0, -0.3, 0.0, 0.7, 1.5}) {
    const Alpha a = Alpha::from_signed(x);
    EXPECT_DOUBLE_EQ(a.signed_value(), x);
    const GeometryTriple g = triple_from_alpha(4, a, 1.7);
    const Alpha back = make_alpha(g);
    EXPECT_NEAR(back.signed_value(), x, 1e-14);
    EXPECT_NEAR(curvature_from_alpha(4, a, 1.7), g.K, 1e-14);
  }
}

TEST(Geometry, RejectsInvalidTriples) {
  EXPECT_THROW(validate({0, 1.0, 0.0}), DomainError);
  EXPECT_THROW(validate({2, 0.0, 0.0}), DomainError);
  EXPECT_THROW(validate({2, -1.0, 0.0}), DomainError);
  EXPECT_THROW(validate({2, 1.0, NAN}), DomainError);
  EXPECT_NO_THROW(validate({1, 1.0, 5.0}));
}

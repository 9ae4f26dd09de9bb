#include "eigenbound/geometry.hpp"

#include <cmath>
#include <sstream>

#include "eigenbound/errors.hpp"

namespace eigenbound {

namespace {
constexpr double kMyersSlack = 1e-12;
}

Alpha Alpha::from_signed(double x) {
  if (x < 0.0) return negative(-x);
  if (x > 0.0) return positive(x);
  return {};
}

Alpha Alpha::negative(double magnitude) {
  if (magnitude < 0.0) throw DomainError("alpha magnitude must be nonnegative");
  if (magnitude == 0.0) return {};
  return {CurvatureSign::negative_K, magnitude};
}

Alpha Alpha::positive(double magnitude) {
  if (magnitude < 0.0) throw DomainError("alpha magnitude must be nonnegative");
  if (magnitude == 0.0) return {};
  if (magnitude > kHalfPi + kMyersSlack) {
    throw MyersViolation("|alpha| = " + std::to_string(magnitude) + " exceeds pi/2 for K > 0");
  }
  return {CurvatureSign::positive_K, std::min(magnitude, kHalfPi)};
}

double Alpha::signed_value() const noexcept {
  switch (sign) {
    case CurvatureSign::negative_K: return -magnitude;
    case CurvatureSign::positive_K: return magnitude;
    case CurvatureSign::zero: break;
  }
  return 0.0;
}

double Alpha::square() const noexcept {
  const double m2 = magnitude * magnitude;
  return sign == CurvatureSign::positive_K ? -m2 : m2;
}

bool Alpha::at_myers_limit() const noexcept {
  return sign == CurvatureSign::positive_K && kHalfPi - magnitude <= 4.0 * kMyersSlack;
}

void validate(const GeometryTriple& g) {
  if (g.d < 1) throw DomainError("dimension d must be >= 1");
  if (!(g.D > 0.0) || !std::isfinite(g.D)) throw DomainError("diameter D must be positive and finite");
  if (!std::isfinite(g.K)) throw DomainError("Ricci bound K must be finite");
  if (g.K > 0.0 && g.d >= 2) {
    const double m = 0.5 * g.D * std::sqrt(g.K / (g.d - 1));
    if (m > kHalfPi + kMyersSlack) {
      std::ostringstream os;
      os << "Myers bound violated: |alpha| = " << m << " > pi/2 for d=" << g.d << ", D=" << g.D
         << ", K=" << g.K;
      throw MyersViolation(os.str());
    }
  }
}

Alpha make_alpha(const GeometryTriple& g) {
  validate(g);
  if (g.d == 1 || g.K == 0.0) return {};
  const double m = 0.5 * g.D * std::sqrt(std::abs(g.K) / (g.d - 1));
  return g.K < 0.0 ? Alpha::negative(m) : Alpha::positive(m);
}

double curvature_from_alpha(int d, const Alpha& alpha, double D) {
  if (d < 2 || alpha.is_zero()) return 0.0;
  // alpha^2 = -K D^2 / (4 (d-1))
  return -4.0 * (d - 1) * alpha.square() / (D * D);
}

GeometryTriple triple_from_alpha(int d, const Alpha& alpha, double D) {
  if (d == 1 && !alpha.is_zero()) throw DomainError("alpha is identically 0 when d = 1");
  return {d, D, curvature_from_alpha(d, alpha, D)};
}

std::string to_string(CurvatureSign sign) {
  switch (sign) {
    case CurvatureSign::negative_K: return "negative_K";
    case CurvatureSign::zero: return "zero";
    case CurvatureSign::positive_K: return "positive_K";
  }
  return "?";
}

std::string to_string(const Alpha& alpha) {
  std::ostringstream os;
  os.precision(12);
  os << to_string(alpha.sign) << ":" << alpha.magnitude;
  return os.str();
}

}  // namespace eigenbound

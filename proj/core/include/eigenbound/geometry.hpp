#pragma once

#include <numbers>
#include <string>

namespace eigenbound {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/// Dimension, diameter and Ricci lower bound of a compact manifold.
struct GeometryTriple {
  int d = 2;
  double D = 1.0;
  double K = 0.0;
};

/// Which branch of cosh/tanh the parameter alpha selects. For K > 0 alpha is
/// imaginary; we keep |alpha| and switch to cos/tan.
enum class CurvatureSign { negative_K, zero, positive_K };

/// alpha = (D/2) sqrt(-K/(d-1)), stored as a sign tag and a magnitude.
struct Alpha {
  CurvatureSign sign = CurvatureSign::zero;
  double magnitude = 0.0;

  /// Figure-axis convention: x < 0 means K < 0 with |alpha| = |x|,
  /// x > 0 means K > 0 with |alpha| = x.
  static Alpha from_signed(double x);
  static Alpha negative(double magnitude);
  static Alpha positive(double magnitude);

  /// Inverse of from_signed.
  [[nodiscard]] double signed_value() const noexcept;
  /// The signed square alpha^2: +|alpha|^2 for K < 0 and -|alpha|^2 for K > 0.
  [[nodiscard]] double square() const noexcept;
  [[nodiscard]] bool is_zero() const noexcept { return magnitude == 0.0; }
  /// True when K > 0 and |alpha| is pi/2 up to rounding.
  [[nodiscard]] bool at_myers_limit() const noexcept;

  friend bool operator==(const Alpha&, const Alpha&) = default;
};

/// Throws DomainError for d < 1 or D <= 0, MyersViolation for |alpha| > pi/2
/// when K > 0.
void validate(const GeometryTriple& g);

/// Throws like validate(). |alpha| within 1e-12 above pi/2 is snapped to pi/2.
Alpha make_alpha(const GeometryTriple& g);

/// The Ricci bound K that produces alpha for the given d and D.
double curvature_from_alpha(int d, const Alpha& alpha, double D);
GeometryTriple triple_from_alpha(int d, const Alpha& alpha, double D);

std::string to_string(CurvatureSign sign);
std::string to_string(const Alpha& alpha);

}  // namespace eigenbound

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "eigenbound/geometry.hpp"
#include "eigenbound/panel_grid.hpp"
#include "eigenbound/quadrature.hpp"

namespace eigenbound {

/// M_alpha = (pi^2/4) int_0^1 (1-y) cos(pi y/2) sech^2(alpha y) dy, with
/// sec^2(|alpha| y) for K > 0. Equals 1 at alpha = 0, is below 1 for K < 0
/// and above 1 for K > 0.
double m_alpha(const Alpha& alpha);

/// M_alpha after the positive-curvature clamp: for K > 0 and |alpha| beyond
/// the clamp root alpha0(d), alpha0 is used instead.
struct CorrectionResult {
  double m_alpha = 1.0;
  Alpha alpha_used;
  bool clamped = false;
};

CorrectionResult correction(int d, const Alpha& alpha);

/// A coefficient a with its first two derivatives.
struct Coefficient {
  RealFunction a;
  RealFunction da;
  RealFunction d2a;
};

/// h(x) = (2/pi)^2 { a(x) - sec(pi x/2) [ (1-x) a'(0) + (1-x) int_0^x a'' cos(pi y/2) dy
///                    + int_x^1 (-2a' + (1-y) a'') cos(pi y/2) dy ] },
/// the ratio f_2/f_1 for f_1 = cos(pi x/2). The principal eigenvalue of
/// a^-1 d^2/dx^2 (Neumann at 0, Dirichlet at 1) lies between inf 1/h and
/// sup 1/h. Near x = 1 the value is extrapolated from x = 1 - 2^-k.
/// Throws NonPositiveCoefficient when a <= 0 at a quadrature node.
double h_general(const Coefficient& c, double x, double tol = 1e-13);

struct HatLambdaBracket {
  double lower = 0.0;  // inf 1/h
  double upper = 0.0;  // sup 1/h
};
HatLambdaBracket hat_lambda_bracket(const Coefficient& c, std::size_t resolution = 400);

/// The kernel h_alpha of the curvature correction: h for a = sech^2(alpha y)
/// (sec^2(|alpha| y) for K > 0), tabulated once per alpha.
class HAlphaKernel {
 public:
  explicit HAlphaKernel(const Alpha& alpha, std::size_t panels = 256);

  [[nodiscard]] const Alpha& alpha() const noexcept { return alpha_; }
  [[nodiscard]] CurvatureSign branch() const noexcept { return alpha_.sign; }

  /// h_alpha(x) for x in [0, 1].
  [[nodiscard]] double operator()(double x) const;
  /// h_alpha(0) from its one-integral closed form.
  [[nodiscard]] double at_zero() const;

  /// The coefficient a and the auxiliary maps of the current branch:
  /// negative branch p = sech^2 tanh, q = sech^4 (2 - cosh 2 alpha y);
  /// positive branch p+ = sec^2 tan, q+ = sec^4 (2 - cos 2|alpha| y).
  [[nodiscard]] double p(double y) const;
  [[nodiscard]] double q(double y) const;
  [[nodiscard]] Coefficient coefficient() const;

 private:
  double direct(double x) const;

  Alpha alpha_;
  GridFunction inner_;  // x -> int_0^x a'' cos
  GridFunction outer_;  // x -> int_x^1 (-2a' + (1-y) a'') cos
};

double h_alpha(const Alpha& alpha, double x);

/// Summary of the numerical check that h_alpha attains its sup (K < 0) or
/// inf (K > 0) over x at x = 0.
struct ExtremumCheck {
  std::size_t alpha_points = 0;
  std::size_t x_points = 0;
  double worst_violation = 0.0;  // max over the grid of the signed excess
  Alpha worst_alpha;
  double worst_x = 0.0;
  [[nodiscard]] bool passed(double tol = 1e-9) const { return worst_violation <= tol; }
};

/// Runs an alpha_points x x_points grid over negative |alpha| in (0, negative_max]
/// and positive |alpha| in (0, positive_max].
ExtremumCheck check_h_alpha_extremum(std::size_t alpha_points = 200, std::size_t x_points = 200,
                                     double negative_max = 6.0, double positive_max = 1.57);

/// Shi-Zhang closed form with K replaced by K M_alpha (lambda_1 scale).
double corrected_shi_zhang(const GeometryTriple& g);

/// sup_s s[(1-s) pi^2 + c] in closed form (lambda-bar scale).
double middle_term_closed(double c);

enum class CombinedTerm { delta1_star, middle, sphere };
std::string to_string(CombinedTerm t);

struct CombinedResult {
  double value = 0.0;  // lambda_1 scale
  CombinedTerm winner = CombinedTerm::delta1_star;
  // The three candidates on the lambda-bar scale.
  double delta1_star_term = 0.0;
  double middle_term = 0.0;
  double sphere_term = 0.0;
  CorrectionResult correction;
  /// The dimension-free quadratic bound (lambda_1 scale) when |K| D^2 <= 4.
  std::optional<double> quadratic;
};

/// Middle term sup_s s[(1-s) pi^2 - (d-1) alpha^2 M_alpha] with the clamp.
double combined_middle_term(int d, const Alpha& alpha);
CombinedResult combined_bound(const GeometryTriple& g);
/// Uses a known delta1* instead of recomputing it.
CombinedResult combined_bound(const GeometryTriple& g, double delta1_star);

enum class MeanAnchor { at_zero, at_half_pi };
std::string to_string(MeanAnchor a);

struct ConvexMean {
  double gamma = 0.0;
  double epsilon = 0.0;
  MeanAnchor anchor = MeanAnchor::at_zero;
};

/// (5^(2/3) - 5 pi^2/16) / (5^(2/3) - 10/3).
double gamma_zero();
/// (d pi^2/4 - 1/delta1*) / (1/delta1*' - 1/delta1*) at |alpha| = pi/2, K > 0.
double gamma_half_pi(int d);

/// gamma/delta1*' + (1 - gamma)/delta1* at the given alpha.
ConvexMean epsilon_mean(int d, const Alpha& alpha, MeanAnchor anchor);

}  // namespace eigenbound

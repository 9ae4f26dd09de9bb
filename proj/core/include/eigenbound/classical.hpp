#pragma once

#include <array>
#include <string>
#include <vector>

#include "eigenbound/geometry.hpp"

namespace eigenbound {

/// The ten historical lower bounds for lambda_1, in their customary order.
enum class EstimateId {
  Lichnerowicz,
  BBG,
  SphereComparison,
  ZhongYang,
  ExpDecay,
  CoshDecay,
  SechFixedPoint,
  Linear,
  ShiZhang,
  Quadratic,
};

inline constexpr std::array<EstimateId, 10> kAllEstimates = {
    EstimateId::Lichnerowicz, EstimateId::BBG,       EstimateId::SphereComparison, EstimateId::ZhongYang,
    EstimateId::ExpDecay,     EstimateId::CoshDecay, EstimateId::SechFixedPoint, EstimateId::Linear,
    EstimateId::ShiZhang,     EstimateId::Quadratic,
};

/// Short machine-readable key, e.g. "shi_zhang".
std::string estimate_key(EstimateId id);
/// Human-readable name, e.g. "Lichnerowicz".
std::string estimate_name(EstimateId id);

/// Iteration state of the sech fixed point theta = theta1 tanh(theta).
struct SechIterationState {
  double theta1 = 0.0;
  std::vector<double> iterates;
  double theta = 0.0;
};

struct SechFixedPointResult {
  double bound = 0.0;
  SechIterationState state;
};

// All functions return lambda_1-scale values and throw DomainError outside
// their stated range.

/// dK/(d-1); d > 1, K >= 0.
double lichnerowicz(const GeometryTriple& g);
/// (K/(d-1)) d [int_0^{pi/2} cos^{d-1} / int_0^{|alpha|} cos^{d-1}]^{2/d}; d > 1, K > 0.
double bbg(const GeometryTriple& g);
/// 4 d |alpha|^2 / (D^2 (1 - cos^d |alpha|)), 8/D^2 at K = 0; d > 1, K >= 0.
double sphere_comparison(const GeometryTriple& g);
/// pi^2/D^2; K >= 0.
double zhong_yang(const GeometryTriple& g);
/// (pi^2/D^2) exp(-(d-1) alpha); K <= 0.
double exp_decay(const GeometryTriple& g);
/// sqrt(pi^4 + 8(d-1) alpha^2) cosh^{1-d}(alpha) / D^2; d > 1, K <= 0.
double cosh_decay(const GeometryTriple& g);
/// ((d-1) alpha tanh(alpha) sech(theta))^2 / D^2; d > 1, K <= 0.
SechFixedPointResult sech_fixed_point(const GeometryTriple& g);
/// pi^2/D^2 + K/2, any K. May be negative.
double linear_combo(const GeometryTriple& g);
/// sup_s s[4(1-s) pi^2/D^2 + K] in closed form; requires K D^2 <= (d-1) pi^2.
double shi_zhang(const GeometryTriple& g);
/// The same closed form without the dimension-dependent range check.
double shi_zhang_value(double K, double D);
/// pi^2/D^2 + K/2 + (10 - pi^2) K^2 D^2 / 16; |K| D^2 <= 4. May be negative.
double quadratic_estimate(const GeometryTriple& g);

/// pi^2/4 + beta + (10 - pi^2) beta^2, |beta| <= 1/2: a lower estimate of the
/// principal eigenvalue of d^2/dr^2 - 2 beta r d/dr on (0, 1).
double beta_lower_estimate(double beta);

/// Left-hand side minus 1 of the clamp equation
/// (pi/(2 sqrt(d-1) x) + sqrt(d-1) x/(2 pi)) cos x = 1.
double alpha0_equation(int d, double x);
/// Smallest root of alpha0_equation in (0, pi/2); throws NoRoot if none.
double alpha0_root(int d);

/// True when `id` applies to g.
bool estimate_applies(EstimateId id, const GeometryTriple& g);
/// Dispatches to the function for `id`.
double evaluate(EstimateId id, const GeometryTriple& g);

}  // namespace eigenbound

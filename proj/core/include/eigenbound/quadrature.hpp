#pragma once

#include <array>
#include <cstddef>
#include <functional>

namespace eigenbound {

using RealFunction = std::function<double(double)>;

/// 15-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre15 {
  static constexpr std::size_t size = 15;
  std::array<double, size> nodes;
  std::array<double, size> weights;

  static const GaussLegendre15& get();
};

/// Single-panel 15-point Gauss-Legendre approximation of the integral of f on [a, b].
double gauss_legendre_15(const RealFunction& f, double a, double b);

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  std::size_t max_panels = 20000;
};

/// Globally adaptive composite Gauss-Legendre quadrature. Panels are bisected
/// in order of their error estimate (difference between the 15-point rule on
/// the panel and on its two halves) until the summed estimate meets
/// max(abs_tol, rel_tol * |I|). Nodes never touch the endpoints, so
/// integrable endpoint singularities converge.
///
/// Throws NoConvergence when the panel budget runs out and DivergentIntegral
/// when the integrand returns +/-inf.
double integrate(const RealFunction& f, double a, double b, const QuadratureOptions& options);
double integrate(const RealFunction& f, double a, double b, double tol = 1e-10);

}  // namespace eigenbound

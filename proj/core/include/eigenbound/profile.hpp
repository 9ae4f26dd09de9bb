#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "eigenbound/geometry.hpp"
#include "eigenbound/panel_grid.hpp"

namespace eigenbound {

struct ProfileOptions {
  double quadrature_tolerance = 1e-10;
  std::size_t panels = 1024;
};

/// C, 1/C, phi and psi sampled on a panel grid. Logarithms are kept so that
/// products such as C^-1 psi^(3/2) stay finite where C underflows and phi
/// overflows (positive curvature near the Myers limit in high dimension).
struct SampledCoefficients {
  std::shared_ptr<const PanelGrid> grid;
  std::vector<double> log_coeff;        // at nodes
  std::vector<double> log_coeff_edges;  // at breakpoints
  std::vector<double> log_phi;
  std::vector<double> log_phi_edges;
  std::vector<double> log_psi;
  std::vector<double> log_psi_edges;

  [[nodiscard]] GridFunction coeff() const;
  [[nodiscard]] GridFunction inverse_coeff() const;
  [[nodiscard]] GridFunction phi() const;
  [[nodiscard]] GridFunction psi() const;

  /// Node values of C^c phi^p psi^q, evaluated in the log domain.
  [[nodiscard]] GridFunction power(double c, double p, double q) const;
  /// Node values of C^c g, evaluated in the log domain.
  [[nodiscard]] GridFunction scale_by_coeff(const GridFunction& g, double c) const;
};

/// The coefficient C(s) = cosh^(d-1)(alpha s) of the reduced one-dimensional
/// problem (cos^(d-1)(|alpha| s) for K > 0), with phi(r) = int_0^r 1/C and
/// psi(r) = int_r^1 C.
class CoefficientProfile {
 public:
  CoefficientProfile(int d, Alpha alpha, ProfileOptions options = {});

  [[nodiscard]] int dimension() const noexcept { return d_; }
  [[nodiscard]] const Alpha& alpha() const noexcept { return alpha_; }
  [[nodiscard]] const ProfileOptions& options() const noexcept { return options_; }
  [[nodiscard]] double quadrature_tolerance() const noexcept { return options_.quadrature_tolerance; }

  [[nodiscard]] double coeff(double s) const;
  [[nodiscard]] double log_coeff(double s) const;
  [[nodiscard]] double inverse_coeff(double s) const;

  /// Throws DivergentIntegral at r = 1 when |alpha| = pi/2, K > 0, d >= 2.
  [[nodiscard]] double phi(double r) const;
  [[nodiscard]] double psi(double r) const;

  /// True when phi(1) is infinite.
  [[nodiscard]] bool phi_diverges() const noexcept;

  [[nodiscard]] const SampledCoefficients& samples() const noexcept { return *samples_; }
  /// Samples on the same grid with r inserted as an extra breakpoint.
  [[nodiscard]] SampledCoefficients with_breakpoint(double r) const;

 private:
  int d_;
  Alpha alpha_;
  ProfileOptions options_;
  std::shared_ptr<const SampledCoefficients> samples_;
};

}  // namespace eigenbound

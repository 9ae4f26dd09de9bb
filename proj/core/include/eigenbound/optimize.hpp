#pragma once

#include <cstddef>

#include "eigenbound/quadrature.hpp"

namespace eigenbound {

struct Extremum {
  double argument = 0.0;
  double value = 0.0;
};

struct SupOptions {
  std::size_t resolution = 2001;  // interior grid points
  double x_tol = 1e-12;           // golden-section bracket width
};

/// Supremum of f over the open interval (a, b): a uniform scan of interior
/// points, then golden-section refinement in the two cells around the best
/// scan point. Any +inf evaluation makes the result +inf; NaN evaluations are
/// ignored.
Extremum sup_on_interval(const RealFunction& f, double a, double b, const SupOptions& options = {});
Extremum sup_on_unit_interval(const RealFunction& f, std::size_t resolution = 2001);

/// Infimum counterpart; -inf evaluations make the result -inf.
Extremum inf_on_interval(const RealFunction& f, double a, double b, const SupOptions& options = {});
Extremum inf_on_unit_interval(const RealFunction& f, std::size_t resolution = 2001);

/// Golden-section maximisation of f on [a, b]; assumes unimodality there.
Extremum golden_section_max(const RealFunction& f, double a, double b, double x_tol = 1e-12);

/// Bisection on a sign change of f in [a, b]. Throws NoBracket when f(a) and
/// f(b) have the same strict sign.
double bisect_root(const RealFunction& f, double a, double b, double x_tol = 1e-12);

}  // namespace eigenbound

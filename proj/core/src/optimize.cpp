#include "eigenbound/optimize.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "eigenbound/errors.hpp"

namespace eigenbound {

namespace {

constexpr double kInvPhi = 0.6180339887498948482;

}  // namespace

Extremum golden_section_max(const RealFunction& f, double a, double b, double x_tol) {
  auto eval = [&](double x) {
    const double v = f(x);
    return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
  };
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = eval(x1);
  double f2 = eval(x2);
  for (int iter = 0; iter < 200 && (b - a) > x_tol; ++iter) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = eval(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = eval(x2);
    }
  }
  return f1 >= f2 ? Extremum{x1, f1} : Extremum{x2, f2};
}

Extremum sup_on_interval(const RealFunction& f, double a, double b, const SupOptions& options) {
  const std::size_t n = std::max<std::size_t>(options.resolution, 3);
  const double h = (b - a) / static_cast<double>(n + 1);
  Extremum best{0.5 * (a + b), -std::numeric_limits<double>::infinity()};
  std::size_t best_index = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double x = a + h * static_cast<double>(i);
    const double v = f(x);
    if (std::isnan(v)) continue;
    if (v == std::numeric_limits<double>::infinity()) return {x, v};
    if (v > best.value) {
      best = {x, v};
      best_index = i;
    }
  }
  if (best_index == 0) return best;

  const double lo = a + h * static_cast<double>(best_index - 1);
  const double hi = a + h * static_cast<double>(best_index + 1);
  const Extremum polished = golden_section_max(f, lo, hi, options.x_tol);
  if (polished.value == std::numeric_limits<double>::infinity()) return polished;
  return polished.value > best.value ? polished : best;
}

Extremum sup_on_unit_interval(const RealFunction& f, std::size_t resolution) {
  return sup_on_interval(f, 0.0, 1.0, SupOptions{resolution, SupOptions{}.x_tol});
}

Extremum inf_on_interval(const RealFunction& f, double a, double b, const SupOptions& options) {
  const Extremum e = sup_on_interval([&](double x) { return -f(x); }, a, b, options);
  return {e.argument, -e.value};
}

Extremum inf_on_unit_interval(const RealFunction& f, std::size_t resolution) {
  return inf_on_interval(f, 0.0, 1.0, SupOptions{resolution, SupOptions{}.x_tol});
}

double bisect_root(const RealFunction& f, double a, double b, double x_tol) {
  double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    throw NoBracket("bisection interval does not bracket a sign change");
  }
  for (int iter = 0; iter < 400 && (b - a) > x_tol; ++iter) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace eigenbound

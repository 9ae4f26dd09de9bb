#include "eigenbound/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "eigenbound/errors.hpp"

namespace eigenbound {

namespace {

GaussLegendre15 build_rule() {
  constexpr int n = static_cast<int>(GaussLegendre15::size);
  GaussLegendre15 rule{};
  for (int i = 0; i < n; ++i) {
    long double x = std::cos(3.14159265358979323846264338327950288L * (i + 0.75L) / (n + 0.5L));
    long double dp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L;
      long double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0L);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-19L) break;
    }
    // store ascending
    rule.nodes[n - 1 - i] = static_cast<double>(x);
    rule.weights[n - 1 - i] = static_cast<double>(2.0L / ((1.0L - x * x) * dp * dp));
  }
  rule.nodes[n / 2] = 0.0;
  return rule;
}

struct Panel {
  double a;
  double b;
  double whole;   // rule on [a, b]
  double left;    // rule on [a, m]
  double right;   // rule on [m, b]
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

double checked(double v) {
  if (std::isinf(v)) throw DivergentIntegral("integrand is infinite on the integration interval");
  if (std::isnan(v)) throw NoConvergence("integrand returned NaN");
  return v;
}

Panel make_panel(const RealFunction& f, double a, double b, double whole) {
  const double m = 0.5 * (a + b);
  Panel p{a, b, whole, checked(gauss_legendre_15(f, a, m)), checked(gauss_legendre_15(f, m, b)), 0.0};
  p.error = std::abs(p.whole - (p.left + p.right));
  return p;
}

}  // namespace

const GaussLegendre15& GaussLegendre15::get() {
  static const GaussLegendre15 rule = build_rule();
  return rule;
}

double gauss_legendre_15(const RealFunction& f, double a, double b) {
  const auto& rule = GaussLegendre15::get();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t k = 0; k < GaussLegendre15::size; ++k) {
    sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
  }
  return half * sum;
}

double integrate(const RealFunction& f, double a, double b, const QuadratureOptions& options) {
  if (a == b) return 0.0;
  if (b < a) return -integrate(f, b, a, options);

  std::priority_queue<Panel> queue;
  queue.push(make_panel(f, a, b, checked(gauss_legendre_15(f, a, b))));
  double total = queue.top().left + queue.top().right;
  double error = queue.top().error;
  std::size_t panels = 1;
  // Panels too narrow to split further are retired with their estimate.
  double retired_error = 0.0;

  while (error > std::max(options.abs_tol, options.rel_tol * std::abs(total))) {
    if (queue.empty()) {
      if (retired_error > std::max(options.abs_tol, options.rel_tol * std::abs(total))) {
        throw NoConvergence("adaptive quadrature exhausted floating-point resolution");
      }
      break;
    }
    if (panels >= options.max_panels) {
      throw NoConvergence("adaptive quadrature exceeded its subdivision budget");
    }
    Panel worst = queue.top();
    queue.pop();
    const double m = 0.5 * (worst.a + worst.b);
    if (!(m > worst.a && m < worst.b) || worst.b - worst.a < 4.0 * std::numeric_limits<double>::denorm_min()) {
      retired_error += worst.error;
      continue;
    }
    Panel lhs = make_panel(f, worst.a, m, worst.left);
    Panel rhs = make_panel(f, m, worst.b, worst.right);
    total += (lhs.left + lhs.right + rhs.left + rhs.right) - (worst.left + worst.right);
    error += lhs.error + rhs.error - worst.error;
    queue.push(lhs);
    queue.push(rhs);
    ++panels;
    if (error < 0.0) error = 0.0;
  }

  // Re-sum from scratch to shed accumulated cancellation in `total`.
  double sum = 0.0;
  while (!queue.empty()) {
    sum += queue.top().left + queue.top().right;
    queue.pop();
  }
  return panels > 1 ? sum : total;
}

double integrate(const RealFunction& f, double a, double b, double tol) {
  return integrate(f, a, b, QuadratureOptions{tol, 0.0, QuadratureOptions{}.max_panels});
}

}  // namespace eigenbound

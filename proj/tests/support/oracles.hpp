#pragma once

// Deliberately plain reference computations for the tests. None of them
// share code with the library: composite Simpson instead of adaptive
// Gauss-Legendre, grid scans instead of golden-section polish, and a
// finite-difference eigensolver instead of shooting.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

inline double grid_max(const std::function<double(double)>& f, double a, double b, int n = 20000) {
  double best = -INFINITY;
  for (int i = 0; i <= n; ++i) best = std::max(best, f(a + (b - a) * i / n));
  return best;
}

inline double bisect(const std::function<double(double)>& f, double a, double b, int iters = 200) {
  double fa = f(a);
  for (int i = 0; i < iters; ++i) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fm > 0) == (fa > 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

/// Coefficient C(r) of the reduced operator (1/C)(C f')' for signed alpha x:
/// cosh^(d-1)(x r) for x < 0, cos^(d-1)(x r) for x > 0.
inline std::function<double(double)> coefficient(int d, double x) {
  const double b = std::abs(x);
  if (x < 0) return [=](double r) { return std::pow(std::cosh(b * r), d - 1); };
  return [=](double r) { return std::pow(std::cos(b * r), d - 1); };
}

/// Lowest eigenvalue of -(C f')' = lambda C f on (0, 1) with f(0) = 0 and
/// f'(1) = 0, second-order finite volumes on n cells. The symmetrised
/// tridiagonal matrix is bisected with Sturm counts.
inline double fd_eigenvalue_once(const std::function<double(double)>& C, int n) {
  const double h = 1.0 / n;
  std::vector<double> diag(n), off(n, 0.0);
  std::vector<double> mass(n);
  for (int i = 1; i <= n; ++i) {
    const double cl = C((i - 0.5) * h);
    const double cr = i < n ? C((i + 0.5) * h) : 0.0;
    diag[i - 1] = (cl + cr) / (h * h);
    if (i < n) off[i - 1] = -cr / (h * h);
    mass[i - 1] = C(i * h) * (i < n ? 1.0 : 0.5);
  }
  for (int i = 0; i < n; ++i) {
    diag[i] /= mass[i];
    if (i + 1 < n) off[i] /= std::sqrt(mass[i] * mass[i + 1]);
  }
  auto below = [&](double x) {
    int count = 0;
    double q = 1.0;
    for (int i = 0; i < n; ++i) {
      const double b2 = i ? off[i - 1] * off[i - 1] : 0.0;
      q = diag[i] - x - (i ? b2 / q : 0.0);
      if (q == 0.0) q = -1e-300;
      if (q < 0) ++count;
    }
    return count;
  };
  double lo = 0.0, hi = 1.0;
  while (below(hi) < 1) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double m = 0.5 * (lo + hi);
    (below(m) >= 1 ? hi : lo) = m;
  }
  return 0.5 * (lo + hi);
}

/// Richardson-extrapolated finite-difference eigenvalue (error O(h^4)).
inline double fd_eigenvalue(const std::function<double(double)>& C, int n = 4000) {
  const double coarse = fd_eigenvalue_once(C, n);
  const double fine = fd_eigenvalue_once(C, 2 * n);
  return (4.0 * fine - coarse) / 3.0;
}

/// M_alpha through its integrated-by-parts form
/// (pi^2/4) int (cos(pi y/2) + (pi/2)(1-y) sin(pi y/2)) tanh(alpha y)/alpha dy,
/// with tan(|alpha| y)/|alpha| for K > 0.
inline double m_alpha_by_parts(double x) {
  const double b = std::abs(x);
  auto t = [=](double y) {
    if (b == 0) return y;
    return x < 0 ? std::tanh(b * y) / b : std::tan(b * y) / b;
  };
  return pi * pi / 4.0 *
         simpson([&](double y) { return (std::cos(pi * y / 2) + pi / 2 * (1 - y) * std::sin(pi * y / 2)) * t(y); },
                 0.0, 1.0);
}

/// (pi^2/4) h_alpha(x) from the explicit p, q representation.
inline double h_alpha_scaled(double xa, double x) {
  const double b = std::abs(xa);
  const bool neg = xa < 0;
  auto p = [=](double y) {
    if (neg) {
      const double s = 1 / std::cosh(b * y);
      return s * s * std::tanh(b * y);
    }
    const double s = 1 / std::cos(b * y);
    return s * s * std::tan(b * y);
  };
  auto q = [=](double y) {
    if (neg) {
      const double s = 1 / std::cosh(b * y);
      return s * s * s * s * (2 - std::cosh(2 * b * y));
    }
    const double s = 1 / std::cos(b * y);
    return s * s * s * s * (2 - std::cos(2 * b * y));
  };
  auto c = [](double y) { return std::cos(pi * y / 2); };
  const double inner = x > 0 ? simpson([&](double y) { return q(y) * c(y); }, 0.0, x) : 0.0;
  const double outer = simpson([&](double y) { return (-2 * p(y) + b * (1 - y) * q(y)) * c(y); }, x, 1.0);
  const double bracket = b * (1 - x) * inner + outer;
  const double a = neg ? std::pow(1 / std::cosh(b * x), 2) : std::pow(1 / std::cos(b * x), 2);
  return a + (neg ? 2.0 : -2.0) * b / c(x) * bracket;
}

}  // namespace oracle

namespace oracle {

/// The five delta functionals from uniform trapezoid tables of C, phi and
/// psi on n cells, maximised over the interior grid points.
struct Deltas {
  double delta, delta1, delta1_prime, delta1_star, delta1_star_prime;
};

inline Deltas deltas(int d, double x, int n = 40000) {
  const auto C = coefficient(d, x);
  const double h = 1.0 / n;
  std::vector<double> c(n + 1), phi(n + 1, 0.0), psi(n + 1, 0.0);
  for (int i = 0; i <= n; ++i) c[i] = C(i * h);
  for (int i = 1; i <= n; ++i) phi[i] = phi[i - 1] + 0.5 * h * (1 / c[i - 1] + 1 / c[i]);
  for (int i = n - 1; i >= 0; --i) psi[i] = psi[i + 1] + 0.5 * h * (c[i] + c[i + 1]);
  auto left = [&](auto&& g) {
    std::vector<double> out(n + 1, 0.0);
    for (int i = 1; i <= n; ++i) out[i] = out[i - 1] + 0.5 * h * (g(i - 1) + g(i));
    return out;
  };
  auto right = [&](auto&& g) {
    std::vector<double> out(n + 1, 0.0);
    for (int i = n - 1; i >= 0; --i) out[i] = out[i + 1] + 0.5 * h * (g(i) + g(i + 1));
    return out;
  };
  const auto a1 = left([&](int i) { return c[i] * std::pow(phi[i], 1.5); });
  const auto a2 = right([&](int i) { return c[i] * std::sqrt(phi[i]); });
  const auto b1 = left([&](int i) { return c[i] * phi[i] * phi[i]; });
  const auto s1 = right([&](int i) { return std::pow(psi[i], 1.5) / c[i]; });
  const auto s2 = left([&](int i) { return std::sqrt(psi[i]) / c[i]; });
  const auto t1 = right([&](int i) { return psi[i] * psi[i] / c[i]; });
  Deltas out{0, 0, 0, 0, 0};
  for (int i = 1; i < n; ++i) {
    const double pp = phi[i] * psi[i];
    out.delta = std::max(out.delta, pp);
    out.delta1 = std::max(out.delta1, a1[i] / std::sqrt(phi[i]) + std::sqrt(phi[i]) * a2[i]);
    out.delta1_prime = std::max(out.delta1_prime, b1[i] / phi[i] + pp);
    out.delta1_star = std::max(out.delta1_star, s1[i] / std::sqrt(psi[i]) + std::sqrt(psi[i]) * s2[i]);
    out.delta1_star_prime = std::max(out.delta1_star_prime, t1[i] / psi[i] + pp);
  }
  return out;
}

}  // namespace oracle

#include "eigenbound/correction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "eigenbound/classical.hpp"
#include "eigenbound/errors.hpp"
#include "eigenbound/optimize.hpp"
#include "eigenbound/universal.hpp"

namespace eigenbound {

namespace {

constexpr double kPi2 = kPi * kPi;
constexpr double kFourOverPi2 = 4.0 / kPi2;
constexpr int kFirstK = 2;
constexpr int kLastK = 8;
const double kExtrapolateFrom = 1.0 - std::ldexp(1.0, -6);

// cos(pi y / 2), accurate near y = 1
double cos_half_pi(double y) { return y <= 0.5 ? std::cos(kHalfPi * y) : std::sin(kHalfPi * (1.0 - y)); }

double sech(double x) { return 1.0 / std::cosh(x); }

// cos(x) accurate near pi/2
double cos_near_half_pi(double x) { return x <= 0.25 * kPi ? std::cos(x) : std::sin(kHalfPi - x); }

// Polynomial through (t_k, v_k) for t_k = 2^-k, evaluated at t.
double neville(const std::array<double, kLastK - kFirstK + 1>& values, double t) {
  constexpr std::size_t n = kLastK - kFirstK + 1;
  std::array<double, n> ts{};
  for (std::size_t i = 0; i < n; ++i) ts[i] = std::ldexp(1.0, -(kFirstK + static_cast<int>(i)));
  std::array<double, n> p = values;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      p[i] = ((t - ts[i + level]) * p[i] - (t - ts[i]) * p[i + 1]) / (ts[i] - ts[i + level]);
    }
  }
  return p[0];
}

template <typename F>
double extrapolate_to(F&& direct, double x) {
  std::array<double, kLastK - kFirstK + 1> v{};
  for (int k = kFirstK; k <= kLastK; ++k) v[static_cast<std::size_t>(k - kFirstK)] = direct(1.0 - std::ldexp(1.0, -k));
  return neville(v, 1.0 - x);
}

}  // namespace

// ---------------------------------------------------------------------------

double m_alpha(const Alpha& alpha) {
  if (alpha.is_zero()) return 1.0;
  const double b = alpha.magnitude;
  RealFunction f;
  if (alpha.sign == CurvatureSign::negative_K) {
    f = [b](double y) {
      const double s = sech(b * y);
      return (1.0 - y) * cos_half_pi(y) * s * s;
    };
  } else {
    f = [b](double y) {
      const double c = cos_near_half_pi(b * y);
      return (1.0 - y) * cos_half_pi(y) / (c * c);
    };
  }
  return kPi2 / 4.0 * integrate(f, 0.0, 1.0, QuadratureOptions{1e-14, 1e-13, 200000});
}

CorrectionResult correction(int d, const Alpha& alpha) {
  CorrectionResult out;
  out.alpha_used = alpha;
  if (alpha.sign == CurvatureSign::positive_K && d >= 2) {
    const double a0 = alpha0_root(d);
    if (alpha.magnitude > a0) {
      out.alpha_used = Alpha::positive(a0);
      out.clamped = true;
    }
  }
  out.m_alpha = m_alpha(out.alpha_used);
  return out;
}

double h_general(const Coefficient& c, double x, double tol) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("h is defined on [0, 1]");
  auto check = [&c](double y) {
    const double v = c.a(y);
    if (!(v > 0.0)) throw NonPositiveCoefficient("coefficient a must be positive on (0, 1)");
    return v;
  };
  const double da0 = c.da(0.0);
  const QuadratureOptions opts{tol, 1e-11, 200000};
  auto direct = [&](double t) {
    const double ax = check(t);
    const double inner = integrate(
        [&](double y) {
          check(y);
          return c.d2a(y) * cos_half_pi(y);
        },
        0.0, t, opts);
    const double outer = integrate(
        [&](double y) {
          check(y);
          return (-2.0 * c.da(y) + (1.0 - y) * c.d2a(y)) * cos_half_pi(y);
        },
        t, 1.0, opts);
    const double bracket = (1.0 - t) * (da0 + inner) + outer;
    return kFourOverPi2 * (ax - bracket / cos_half_pi(t));
  };
  if (x >= kExtrapolateFrom) return extrapolate_to(direct, x);
  return direct(x);
}

HatLambdaBracket hat_lambda_bracket(const Coefficient& c, std::size_t resolution) {
  auto h = [&c](double x) { return h_general(c, x); };
  const SupOptions opts{resolution, 1e-10};
  const double top = std::max({h(0.0), h(1.0), sup_on_interval(h, 0.0, 1.0, opts).value});
  const double bottom = std::min({h(0.0), h(1.0), inf_on_interval(h, 0.0, 1.0, opts).value});
  return {1.0 / top, 1.0 / bottom};
}

// ---------------------------------------------------------------------------

HAlphaKernel::HAlphaKernel(const Alpha& alpha, std::size_t panels) : alpha_(alpha) {
  if (alpha.at_myers_limit()) throw DomainError("h_alpha needs |alpha| < pi/2; sec^2 is unbounded at the Myers limit");
  const auto grid = PanelGrid::chebyshev(panels);
  const Coefficient c = coefficient();
  inner_ = GridFunction::sample(grid, [&](double y) { return c.d2a(y) * cos_half_pi(y); }).left_cumulative();
  outer_ = GridFunction::sample(grid, [&](double y) {
             return (-2.0 * c.da(y) + (1.0 - y) * c.d2a(y)) * cos_half_pi(y);
           }).right_cumulative();
}

namespace {

double p_of(const Alpha& alpha, double y) {
  const double b = alpha.magnitude;
  switch (alpha.sign) {
    case CurvatureSign::zero: return 0.0;
    case CurvatureSign::negative_K: {
      const double s = sech(b * y);
      return s * s * std::tanh(b * y);
    }
    case CurvatureSign::positive_K: {
      const double c = cos_near_half_pi(b * y);
      return std::sin(b * y) / (c * c * c);
    }
  }
  return 0.0;
}

double q_of(const Alpha& alpha, double y) {
  const double b = alpha.magnitude;
  switch (alpha.sign) {
    case CurvatureSign::zero: return 1.0;
    case CurvatureSign::negative_K: {
      // sech^4 (2 - cosh 2x) = 3 sech^4 - 2 sech^2
      const double s2 = sech(b * y) * sech(b * y);
      return s2 * (3.0 * s2 - 2.0);
    }
    case CurvatureSign::positive_K: {
      const double c = cos_near_half_pi(b * y);
      const double s2 = 1.0 / (c * c);
      return s2 * (3.0 * s2 - 2.0);
    }
  }
  return 0.0;
}

Coefficient coefficient_of(const Alpha& alpha) {
  const double b = alpha.magnitude;
  Coefficient c;
  switch (alpha.sign) {
    case CurvatureSign::zero:
      c.a = [](double) { return 1.0; };
      c.da = [](double) { return 0.0; };
      c.d2a = [](double) { return 0.0; };
      break;
    case CurvatureSign::negative_K:
      c.a = [b](double y) {
        const double s = sech(b * y);
        return s * s;
      };
      c.da = [alpha, b](double y) { return -2.0 * b * p_of(alpha, y); };
      c.d2a = [alpha, b](double y) { return -2.0 * b * b * q_of(alpha, y); };
      break;
    case CurvatureSign::positive_K:
      c.a = [b](double y) {
        const double cs = cos_near_half_pi(b * y);
        return 1.0 / (cs * cs);
      };
      c.da = [alpha, b](double y) { return 2.0 * b * p_of(alpha, y); };
      c.d2a = [alpha, b](double y) { return 2.0 * b * b * q_of(alpha, y); };
      break;
  }
  return c;
}

}  // namespace

double HAlphaKernel::p(double y) const { return p_of(alpha_, y); }
double HAlphaKernel::q(double y) const { return q_of(alpha_, y); }
Coefficient HAlphaKernel::coefficient() const { return coefficient_of(alpha_); }

double HAlphaKernel::direct(double x) const {
  const Coefficient c = coefficient();
  const double bracket = (1.0 - x) * inner_(x) + outer_(x);
  return kFourOverPi2 * (c.a(x) - bracket / cos_half_pi(x));
}

double HAlphaKernel::operator()(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("h_alpha is defined on [0, 1]");
  if (x >= kExtrapolateFrom) return extrapolate_to([this](double t) { return direct(t); }, x);
  return direct(x);
}

double HAlphaKernel::at_zero() const {
  const Coefficient c = coefficient();
  const double outer = integrate(
      [&](double y) { return (-2.0 * c.da(y) + (1.0 - y) * c.d2a(y)) * cos_half_pi(y); }, 0.0, 1.0,
      QuadratureOptions{1e-14, 1e-11, 200000});
  return kFourOverPi2 * (c.a(0.0) - outer);
}

double h_alpha(const Alpha& alpha, double x) { return HAlphaKernel(alpha)(x); }

ExtremumCheck check_h_alpha_extremum(std::size_t alpha_points, std::size_t x_points, double negative_max,
                                     double positive_max) {
  ExtremumCheck out;
  out.alpha_points = alpha_points;
  out.x_points = x_points;
  out.worst_violation = -std::numeric_limits<double>::infinity();
  for (int branch = 0; branch < 2; ++branch) {
    for (std::size_t i = 1; i <= alpha_points; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(alpha_points);
      const Alpha a = branch == 0 ? Alpha::negative(negative_max * t) : Alpha::positive(positive_max * t);
      const HAlphaKernel kernel(a);
      const double h0 = kernel(0.0);
      for (std::size_t j = 1; j <= x_points; ++j) {
        const double x = static_cast<double>(j) / static_cast<double>(x_points + 1);
        const double hx = kernel(x);
        // K < 0: sup at 0, so h(x) - h(0) <= 0. K > 0: inf at 0, so h(0) - h(x) <= 0.
        const double excess = (branch == 0 ? hx - h0 : h0 - hx) / std::abs(h0);
        if (excess > out.worst_violation) {
          out.worst_violation = excess;
          out.worst_alpha = a;
          out.worst_x = x;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

double middle_term_closed(double c) {
  if (c > kPi2) return c;
  if (c < -kPi2) return 0.0;
  const double v = kHalfPi + c / (2.0 * kPi);
  return v * v;
}

double combined_middle_term(int d, const Alpha& alpha) {
  if (d < 2 || alpha.is_zero()) return kPi2 / 4.0;
  const CorrectionResult corr = correction(d, alpha);
  const double c = -(d - 1) * corr.alpha_used.square() * corr.m_alpha;
  return middle_term_closed(c);
}

double corrected_shi_zhang(const GeometryTriple& g) {
  const Alpha a = make_alpha(g);
  return 4.0 / (g.D * g.D) * combined_middle_term(g.d, a);
}

std::string to_string(CombinedTerm t) {
  switch (t) {
    case CombinedTerm::delta1_star: return "delta1*";
    case CombinedTerm::middle: return "middle";
    case CombinedTerm::sphere: return "sphere";
  }
  return "unknown";
}

CombinedResult combined_bound(const GeometryTriple& g, double delta1_star_value) {
  const Alpha a = make_alpha(g);
  CombinedResult out;
  out.delta1_star_term = delta1_star_value == std::numeric_limits<double>::infinity() ? 0.0 : 1.0 / delta1_star_value;
  out.correction = g.d >= 2 ? correction(g.d, a) : CorrectionResult{};
  out.middle_term = combined_middle_term(g.d, a);
  if (g.K > 0.0) {
    if (a.is_zero()) {
      out.sphere_term = 2.0;  // limit of d x^2 / (1 - cos^d x) as x -> 0
    } else {
      const double s = std::sin(0.5 * a.magnitude);
      out.sphere_term = g.d * a.magnitude * a.magnitude / -std::expm1(g.d * std::log1p(-2.0 * s * s));
    }
  }
  double best = out.delta1_star_term;
  out.winner = CombinedTerm::delta1_star;
  if (out.middle_term > best) {
    best = out.middle_term;
    out.winner = CombinedTerm::middle;
  }
  if (out.sphere_term > best) {
    best = out.sphere_term;
    out.winner = CombinedTerm::sphere;
  }
  out.value = 4.0 / (g.D * g.D) * best;
  if (estimate_applies(EstimateId::Quadratic, g)) out.quadratic = quadratic_estimate(g);
  return out;
}

CombinedResult combined_bound(const GeometryTriple& g) {
  const Alpha a = make_alpha(g);
  const CoefficientProfile p(g.d, a);
  return combined_bound(g, delta1_star(p).value);
}

std::string to_string(MeanAnchor a) { return a == MeanAnchor::at_zero ? "at_zero" : "at_half_pi"; }

double gamma_zero() {
  const double c = std::cbrt(25.0);  // 5^(2/3)
  return (c - 5.0 * kPi2 / 16.0) / (c - 10.0 / 3.0);
}

double gamma_half_pi(int d) {
  if (d < 2) throw DomainError("gamma at pi/2 needs d >= 2");
  const CoefficientProfile p(d, Alpha::positive(kHalfPi));
  const double lo = 1.0 / delta1_star(p).value;
  const double hi = 1.0 / delta1_star_prime(p).value;
  return (d * kPi2 / 4.0 - lo) / (hi - lo);
}

ConvexMean epsilon_mean(int d, const Alpha& alpha, MeanAnchor anchor) {
  ConvexMean out;
  out.anchor = anchor;
  out.gamma = anchor == MeanAnchor::at_zero ? gamma_zero() : gamma_half_pi(d);
  const CoefficientProfile p(d, alpha);
  const double lo = 1.0 / delta1_star(p).value;
  const double hi = 1.0 / delta1_star_prime(p).value;
  out.epsilon = out.gamma * hi + (1.0 - out.gamma) * lo;
  return out;
}

}  // namespace eigenbound

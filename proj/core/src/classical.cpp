#include "eigenbound/classical.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "eigenbound/errors.hpp"
#include "eigenbound/optimize.hpp"
#include "eigenbound/quadrature.hpp"

namespace eigenbound {

namespace {

constexpr double kPi2 = kPi * kPi;

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

double log_cosh(double x) {
  x = std::abs(x);
  return x + std::log1p(std::exp(-2.0 * x)) - std::numbers::ln2;
}

double cos_power_integral(int k, double upper) {
  return integrate([k](double t) { return std::pow(std::cos(t), k); }, 0.0, upper, 1e-14);
}

}  // namespace

std::string estimate_key(EstimateId id) {
  switch (id) {
    case EstimateId::Lichnerowicz: return "lichnerowicz";
    case EstimateId::BBG: return "bbg";
    case EstimateId::SphereComparison: return "sphere_comparison";
    case EstimateId::ZhongYang: return "zhong_yang";
    case EstimateId::ExpDecay: return "exp_decay";
    case EstimateId::CoshDecay: return "cosh_decay";
    case EstimateId::SechFixedPoint: return "sech_fixed_point";
    case EstimateId::Linear: return "linear";
    case EstimateId::ShiZhang: return "shi_zhang";
    case EstimateId::Quadratic: return "quadratic";
  }
  return "unknown";
}

std::string estimate_name(EstimateId id) {
  switch (id) {
    case EstimateId::Lichnerowicz: return "Lichnerowicz";
    case EstimateId::BBG: return "Berard-Besson-Gallot";
    case EstimateId::SphereComparison: return "sphere comparison (K>=0)";
    case EstimateId::ZhongYang: return "Zhong-Yang";
    case EstimateId::ExpDecay: return "exponential decay";
    case EstimateId::CoshDecay: return "cosh decay (K<=0)";
    case EstimateId::SechFixedPoint: return "sech fixed point";
    case EstimateId::Linear: return "linear pi^2/D^2+K/2";
    case EstimateId::ShiZhang: return "Shi-Zhang";
    case EstimateId::Quadratic: return "quadratic in K D^2";
  }
  return "unknown";
}

double lichnerowicz(const GeometryTriple& g) {
  validate(g);
  require(g.d > 1 && g.K >= 0.0, "Lichnerowicz bound needs d > 1 and K >= 0");
  return g.d * g.K / (g.d - 1);
}

double bbg(const GeometryTriple& g) {
  validate(g);
  require(g.d > 1 && g.K > 0.0, "Berard-Besson-Gallot bound needs d > 1 and K > 0");
  const Alpha a = make_alpha(g);
  const double full = cos_power_integral(g.d - 1, kHalfPi);
  const double part = cos_power_integral(g.d - 1, a.magnitude);
  return g.K / (g.d - 1) * g.d * std::pow(full / part, 2.0 / g.d);
}

double sphere_comparison(const GeometryTriple& g) {
  validate(g);
  require(g.d > 1 && g.K >= 0.0, "sphere-comparison bound needs d > 1 and K >= 0");
  const double D2 = g.D * g.D;
  const Alpha a = make_alpha(g);
  if (a.is_zero()) return 8.0 / D2;
  const double m = a.magnitude;
  // 1 - cos^d(m) without cancellation for small m
  const double s = std::sin(0.5 * m);
  const double one_minus = -std::expm1(g.d * std::log1p(-2.0 * s * s));
  return 4.0 * g.d * m * m / (D2 * one_minus);
}

double zhong_yang(const GeometryTriple& g) {
  validate(g);
  require(g.K >= 0.0, "Zhong-Yang bound needs K >= 0");
  return kPi2 / (g.D * g.D);
}

double exp_decay(const GeometryTriple& g) {
  validate(g);
  require(g.K <= 0.0, "exponential-decay bound needs K <= 0");
  const Alpha a = make_alpha(g);
  return kPi2 / (g.D * g.D) * std::exp(-(g.d - 1) * a.magnitude);
}

double cosh_decay(const GeometryTriple& g) {
  validate(g);
  require(g.d > 1 && g.K <= 0.0, "cosh-decay bound needs d > 1 and K <= 0");
  const double a = make_alpha(g).magnitude;
  return std::sqrt(kPi2 * kPi2 + 8.0 * (g.d - 1) * a * a) * std::exp((1 - g.d) * log_cosh(a)) /
         (g.D * g.D);
}

SechFixedPointResult sech_fixed_point(const GeometryTriple& g) {
  validate(g);
  require(g.d > 1 && g.K <= 0.0, "sech fixed-point bound needs d > 1 and K <= 0");
  const double a = make_alpha(g).magnitude;
  const double lead = (g.d - 1) * a * std::tanh(a);
  SechFixedPointResult out;
  SechIterationState& st = out.state;
  st.theta1 = 0.5 * lead;
  st.iterates.push_back(st.theta1);

  constexpr double kStep = 1e-13;
  constexpr double kZero = 1e-10;
  constexpr std::size_t kCap = 1000000;
  double theta = st.theta1;
  if (st.theta1 <= 1.0) {
    // tanh(x) < x, so the iterates fall to 0.
    while (theta >= kZero && st.iterates.size() < kCap) {
      theta = st.theta1 * std::tanh(theta);
      st.iterates.push_back(theta);
    }
    st.theta = 0.0;
  } else {
    bool converged = false;
    while (st.iterates.size() < kCap) {
      const double next = st.theta1 * std::tanh(theta);
      st.iterates.push_back(next);
      const bool done = std::abs(next - theta) < kStep;
      theta = next;
      if (done) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      for (int i = 0; i < 100; ++i) {
        const double t = std::tanh(theta);
        const double f = theta - st.theta1 * t;
        const double df = 1.0 - st.theta1 * (1.0 - t * t);
        const double step = f / df;
        theta -= step;
        if (std::abs(step) < 1e-16 * std::max(1.0, theta)) break;
      }
    }
    st.theta = theta;
  }
  const double v = lead / std::cosh(st.theta);
  out.bound = v * v / (g.D * g.D);
  return out;
}

double linear_combo(const GeometryTriple& g) {
  validate(g);
  return kPi2 / (g.D * g.D) + 0.5 * g.K;
}

double shi_zhang_value(double K, double D) {
  const double kd2 = K * D * D;
  if (kd2 < -4.0 * kPi2) return 0.0;
  if (kd2 > 4.0 * kPi2) return K;
  const double v = kPi / D + K * D / (4.0 * kPi);
  return v * v;
}

double shi_zhang(const GeometryTriple& g) {
  validate(g);
  if (g.K > 0.0) {
    const double kd2 = g.K * g.D * g.D;
    if (kd2 > (g.d - 1) * kPi2 * (1.0 + 1e-12)) {
      std::ostringstream os;
      os << "Shi-Zhang bound needs K D^2 <= (d-1) pi^2, got " << kd2;
      throw DomainError(os.str());
    }
  }
  return shi_zhang_value(g.K, g.D);
}

double quadratic_estimate(const GeometryTriple& g) {
  validate(g);
  const double D2 = g.D * g.D;
  require(std::abs(g.K) * D2 <= 4.0 * (1.0 + 1e-12), "quadratic in K D^2 bound needs |K| D^2 <= 4");
  return kPi2 / D2 + 0.5 * g.K + (10.0 - kPi2) * g.K * g.K * D2 / 16.0;
}

double beta_lower_estimate(double beta) {
  require(std::abs(beta) <= 0.5, "beta estimate needs |beta| <= 1/2");
  return kPi2 / 4.0 + beta + (10.0 - kPi2) * beta * beta;
}

double alpha0_equation(int d, double x) {
  const double r = std::sqrt(static_cast<double>(d - 1));
  return (kPi / (2.0 * r * x) + r * x / (2.0 * kPi)) * std::cos(x) - 1.0;
}

double alpha0_root(int d) {
  if (d < 2) throw DomainError("alpha0 needs d >= 2");
  constexpr double lo = 1e-6;
  constexpr double hi = kHalfPi - 1e-9;
  constexpr int cells = 1000;
  const double h = (hi - lo) / cells;
  double a = lo;
  double fa = alpha0_equation(d, a);
  for (int i = 1; i <= cells; ++i) {
    const double b = lo + h * i;
    const double fb = alpha0_equation(d, b);
    if ((fa > 0.0) != (fb > 0.0) || fb == 0.0) {
      return bisect_root([d](double x) { return alpha0_equation(d, x); }, a, b, 1e-15);
    }
    a = b;
    fa = fb;
  }
  std::ostringstream os;
  os << "no sign change of the clamp equation on (" << lo << ", " << hi << ") for d=" << d
     << "; value at right end " << fa;
  throw NoRoot(os.str());
}

bool estimate_applies(EstimateId id, const GeometryTriple& g) {
  const double D2 = g.D * g.D;
  switch (id) {
    case EstimateId::Lichnerowicz:
    case EstimateId::SphereComparison: return g.d > 1 && g.K >= 0.0;
    case EstimateId::BBG: return g.d > 1 && g.K > 0.0;
    case EstimateId::ZhongYang: return g.K >= 0.0;
    case EstimateId::ExpDecay: return g.K <= 0.0;
    case EstimateId::CoshDecay:
    case EstimateId::SechFixedPoint: return g.d > 1 && g.K <= 0.0;
    case EstimateId::Linear: return true;
    case EstimateId::ShiZhang: return g.K <= 0.0 || g.K * D2 <= (g.d - 1) * kPi2 * (1.0 + 1e-12);
    case EstimateId::Quadratic: return std::abs(g.K) * D2 <= 4.0 * (1.0 + 1e-12);
  }
  return false;
}

double evaluate(EstimateId id, const GeometryTriple& g) {
  switch (id) {
    case EstimateId::Lichnerowicz: return lichnerowicz(g);
    case EstimateId::BBG: return bbg(g);
    case EstimateId::SphereComparison: return sphere_comparison(g);
    case EstimateId::ZhongYang: return zhong_yang(g);
    case EstimateId::ExpDecay: return exp_decay(g);
    case EstimateId::CoshDecay: return cosh_decay(g);
    case EstimateId::SechFixedPoint: return sech_fixed_point(g).bound;
    case EstimateId::Linear: return linear_combo(g);
    case EstimateId::ShiZhang: return shi_zhang(g);
    case EstimateId::Quadratic: return quadratic_estimate(g);
  }
  throw DomainError("unknown estimate");
}

}  // namespace eigenbound

#include "eigenbound/ode.hpp"

#include <algorithm>
#include <cmath>

#include "eigenbound/errors.hpp"

namespace eigenbound {

namespace {

constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

State2 combo(const State2& y, double h, std::initializer_list<std::pair<double, const State2*>> terms) {
  State2 out = y;
  for (const auto& [w, k] : terms) {
    out[0] += h * w * (*k)[0];
    out[1] += h * w * (*k)[1];
  }
  return out;
}

double hermite(double t0, double t1, double y0, double d0, double y1, double d1, double t) {
  const double h = t1 - t0;
  const double s = (t - t0) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * h * d0 + (-2 * s3 + 3 * s2) * y1 + (s3 - s2) * h * d1;
}

}  // namespace

State2 OdeSolution::at(double t) const {
  if (samples.empty()) return final;
  if (t <= samples.front().t) return samples.front().y;
  if (t >= samples.back().t) return samples.back().y;
  const auto it = std::upper_bound(samples.begin(), samples.end(), t,
                                   [](double v, const OdeSample& s) { return v < s.t; });
  const OdeSample& hi = *it;
  const OdeSample& lo = *(it - 1);
  return {hermite(lo.t, hi.t, lo.y[0], lo.dy[0], hi.y[0], hi.dy[0], t),
          hermite(lo.t, hi.t, lo.y[1], lo.dy[1], hi.y[1], hi.dy[1], t)};
}

OdeSolution dopri5(const Rhs2& f, double t0, double t1, State2 y0, const OdeOptions& options, bool record) {
  OdeSolution sol;
  const double span = t1 - t0;
  const double dir = span >= 0.0 ? 1.0 : -1.0;
  double t = t0;
  State2 y = y0;
  State2 k1 = f(t, y);
  if (record) sol.samples.push_back({t, y, k1});

  double h_max = options.h_max > 0.0 ? options.h_max : std::abs(span);
  double h = std::min(h_max, std::max(1e-6, 1e-3 * std::abs(span)));
  const double h_min = 1e-15 * std::max(1.0, std::abs(t1));

  while (dir * (t1 - t) > 0.0) {
    if (sol.steps >= options.max_steps) throw StiffIntegration("ODE step budget exhausted");
    if (h > std::abs(t1 - t)) h = std::abs(t1 - t);
    const double hs = dir * h;

    const State2 k2 = f(t + c2 * hs, combo(y, hs, {{a21, &k1}}));
    const State2 k3 = f(t + c3 * hs, combo(y, hs, {{a31, &k1}, {a32, &k2}}));
    const State2 k4 = f(t + c4 * hs, combo(y, hs, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State2 k5 = f(t + c5 * hs, combo(y, hs, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State2 k6 = f(t + hs, combo(y, hs, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State2 y_new = combo(y, hs, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State2 k7 = f(t + hs, y_new);

    double err = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
      const double e = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double scale = options.atol + options.rtol * std::max(std::abs(y[i]), std::abs(y_new[i]));
      err = std::max(err, std::abs(e) / scale);
    }
    if (!std::isfinite(err)) err = 1e10;

    if (err <= 1.0) {
      t += hs;
      y = y_new;
      k1 = k7;
      ++sol.steps;
      if (record) sol.samples.push_back({t, y, k1});
      if (std::abs(y[0]) > options.blowup || std::abs(y[1]) > options.blowup) {
        sol.blew_up = true;
        break;
      }
    }
    const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    if (err > 1.0 && h * factor < h_min) throw StiffIntegration("ODE step size underflow");
    h = std::min(h_max, h * factor);
  }
  sol.final = y;
  sol.t_final = t;
  return sol;
}

}  // namespace eigenbound

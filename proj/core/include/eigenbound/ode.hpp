#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace eigenbound {

using State2 = std::array<double, 2>;
using Rhs2 = std::function<State2(double, const State2&)>;

struct OdeOptions {
  double rtol = 1e-11;
  double atol = 1e-11;
  double h_max = 0.0;  // 0 means unlimited
  std::size_t max_steps = 2000000;
  /// Integration stops early once |y| exceeds this; the state keeps its sign.
  double blowup = 1e150;
};

struct OdeSample {
  double t;
  State2 y;
  State2 dy;
};

struct OdeSolution {
  State2 final{};
  double t_final = 0.0;
  bool blew_up = false;
  std::size_t steps = 0;
  /// Accepted steps, present only when recording was requested.
  std::vector<OdeSample> samples;

  /// Cubic Hermite interpolation of each component between recorded steps.
  [[nodiscard]] State2 at(double t) const;
};

/// Dormand-Prince 5(4) with error-per-step control on a two-component system.
/// Throws StiffIntegration when the step size underflows.
OdeSolution dopri5(const Rhs2& f, double t0, double t1, State2 y0, const OdeOptions& options = {},
                   bool record = false);

}  // namespace eigenbound

#include "eigenbound/universal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eigenbound/errors.hpp"

namespace eigenbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double reciprocal(double x) { return x == kInf ? 0.0 : 1.0 / x; }

// Values at nodes left of r are kept; nodes right of r take the value at r.
GridFunction freeze_after(const GridFunction& f, double r, std::size_t r_edge) {
  const auto& grid = *f.grid();
  const double at_r = f.edges()[r_edge];
  std::vector<double> v = f.values();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (grid.nodes()[k] > r) v[k] = at_r;
  }
  std::vector<double> e = f.edges();
  for (std::size_t i = r_edge; i < e.size(); ++i) e[i] = at_r;
  return GridFunction(f.grid(), std::move(v), std::move(e));
}

struct UpperStep {
  double ratio;     // inf_s f_{n+1}/f_n
  double rayleigh;  // Rayleigh ratio of f_n
};

// Runs the upper iteration at one r, returning the first n_max steps.
std::vector<UpperStep> upper_chain(const CoefficientProfile& p, double r, int n_max,
                                   std::vector<double>* f_out = nullptr, int f_index = 0) {
  const SampledCoefficients s = p.with_breakpoint(r);
  const auto& grid = *s.grid;
  const std::size_t b = grid.breakpoint_index(r);
  const std::size_t inner_nodes = b * PanelGrid::order;
  const GridFunction phi = s.phi();
  const GridFunction psi = s.psi();

  GridFunction f = freeze_after(phi, r, b);
  GridFunction g_prev;  // G_{n-1}, so that f_n' = C^-1 G_{n-1} on (0, r)
  std::vector<UpperStep> steps;
  steps.reserve(static_cast<std::size_t>(n_max));

  for (int n = 1; n <= n_max; ++n) {
    if (f_out && n == f_index) *f_out = f.values();
    // Rayleigh ratio of f_n.
    const double numerator = s.scale_by_coeff(f * f, 1.0).integral();
    double denominator;
    if (n == 1) {
      denominator = phi.edges()[b];
    } else {
      const GridFunction d2 = s.scale_by_coeff(g_prev * g_prev, -1.0);
      denominator = 0.0;
      for (std::size_t k = 0; k < inner_nodes; ++k) denominator += safe_product(grid.weights()[k], d2.values()[k]);
    }
    const double rayleigh = numerator / denominator;

    const GridFunction g = s.scale_by_coeff(f, 1.0).right_cumulative();
    const GridFunction h = s.scale_by_coeff(g, -1.0).left_cumulative();
    const GridFunction next = freeze_after(h, r, b);

    // inf over s in (0, r] of next / f.
    double best = next.edges()[b] / f.edges()[b];
    std::size_t best_k = PanelGrid::npos;
    for (std::size_t k = 0; k < inner_nodes; ++k) {
      const double q = next.values()[k] / f.values()[k];
      if (q < best) {
        best = q;
        best_k = k;
      }
    }
    if (best_k != PanelGrid::npos) {
      const double lo = best_k == 0 ? 0.5 * grid.nodes()[0] : grid.nodes()[best_k - 1];
      const double hi = best_k + 1 < inner_nodes ? grid.nodes()[best_k + 1] : r;
      const Extremum polished =
          golden_section_max([&](double x) { return -next(x) / f(x); }, lo, hi, 1e-13);
      best = std::min(best, -polished.value);
    }
    steps.push_back({best, rayleigh});

    g_prev = g;
    // Rescale to keep magnitudes tame; both ratios are scale-free.
    const double scale = next.edges()[b];
    f = (scale > 0.0 && std::isfinite(scale)) ? (1.0 / scale) * next : next;
    g_prev = (scale > 0.0 && std::isfinite(scale)) ? (1.0 / scale) * g_prev : g_prev;
  }
  return steps;
}

}  // namespace

// ---------------------------------------------------------------------------

Extremum delta(const CoefficientProfile& p, std::size_t resolution) {
  const auto& s = p.samples();
  const GridFunction phi = s.phi();
  const GridFunction psi = s.psi();
  return sup_on_unit_interval([&](double r) { return safe_product(phi(r), psi(r)); }, resolution);
}

Extremum delta1(const CoefficientProfile& p, std::size_t resolution) {
  const auto& s = p.samples();
  const GridFunction phi = s.phi();
  const GridFunction a = s.power(1.0, 1.5, 0.0).left_cumulative();
  const GridFunction b = s.power(1.0, 0.5, 0.0).right_cumulative();
  return sup_on_unit_interval(
      [&](double r) {
        const double root = std::sqrt(phi(r));
        return a(r) / root + safe_product(root, b(r));
      },
      resolution);
}

Extremum delta1_prime(const CoefficientProfile& p, std::size_t resolution) {
  const auto& s = p.samples();
  const GridFunction phi = s.phi();
  const GridFunction psi = s.psi();
  const GridFunction a = s.power(1.0, 2.0, 0.0).left_cumulative();
  return sup_on_unit_interval(
      [&](double r) {
        const double f = phi(r);
        return a(r) / f + safe_product(f, psi(r));
      },
      resolution);
}

Extremum delta1_star(const CoefficientProfile& p, std::size_t resolution) {
  const auto& s = p.samples();
  const GridFunction psi = s.psi();
  const GridFunction a = s.power(-1.0, 0.0, 1.5).right_cumulative();
  const GridFunction b = s.power(-1.0, 0.0, 0.5).left_cumulative();
  return sup_on_unit_interval(
      [&](double r) {
        const double root = std::sqrt(psi(r));
        return a(r) / root + safe_product(root, b(r));
      },
      resolution);
}

Extremum delta1_star_prime(const CoefficientProfile& p, std::size_t resolution) {
  const auto& s = p.samples();
  const GridFunction phi = s.phi();
  const GridFunction psi = s.psi();
  const GridFunction a = s.power(-1.0, 0.0, 2.0).right_cumulative();
  return sup_on_unit_interval(
      [&](double r) {
        const double g = psi(r);
        return a(r) / g + safe_product(phi(r), g);
      },
      resolution);
}

BoundBracket delta_bracket(const CoefficientProfile& p, std::size_t resolution) {
  BoundBracket b;
  b.delta = delta(p, resolution).value;
  b.delta1 = delta1(p, resolution).value;
  b.delta1_prime = delta1_prime(p, resolution).value;
  b.delta1_star = delta1_star(p, resolution).value;
  b.delta1_star_prime = delta1_star_prime(p, resolution).value;
  b.lower_for_barlambda = std::max(reciprocal(b.delta1), reciprocal(b.delta1_star));
  b.upper_for_barlambda = std::min(reciprocal(b.delta1_prime), reciprocal(b.delta1_star_prime));
  return b;
}

BoundBracket delta_bracket(int d, const Alpha& alpha, std::size_t resolution) {
  return delta_bracket(CoefficientProfile(d, alpha), resolution);
}

IterationTrace iterate_lower(const CoefficientProfile& p, int n_max, std::size_t resolution) {
  if (n_max < 1) throw DomainError("iteration count must be >= 1");
  const auto& s = p.samples();
  IterationTrace trace;
  trace.n = n_max;
  GridFunction f = s.phi().map([](double x) { return std::sqrt(x); });
  for (int n = 1; n <= n_max; ++n) {
    trace.test_functions.push_back(f.values());
    const GridFunction g = s.scale_by_coeff(f, 1.0).right_cumulative();
    const GridFunction h = s.scale_by_coeff(g, -1.0).left_cumulative();
    const Extremum e = sup_on_unit_interval([&](double r) { return h(r) / f(r); }, resolution);
    trace.lower_sequence.push_back(e.value);
    trace.argsup.push_back(e.argument);
    const double scale = e.value > 0.0 && std::isfinite(e.value) ? 1.0 / e.value : 1.0;
    f = scale * h;
  }
  return trace;
}

IterationTrace iterate_upper(const CoefficientProfile& p, int n_max, std::size_t r_resolution) {
  if (n_max < 1) throw DomainError("iteration count must be >= 1");
  const std::size_t m = std::max<std::size_t>(r_resolution, 3);
  const double h = 1.0 / static_cast<double>(m + 1);

  std::vector<std::vector<UpperStep>> table(m);
  for (std::size_t i = 0; i < m; ++i) table[i] = upper_chain(p, h * static_cast<double>(i + 1), n_max);

  IterationTrace trace;
  trace.n = n_max;
  for (int n = 1; n <= n_max; ++n) {
    const auto idx = static_cast<std::size_t>(n - 1);
    std::size_t best_ratio = 0;
    std::size_t best_rayleigh = 0;
    for (std::size_t i = 1; i < m; ++i) {
      if (table[i][idx].ratio > table[best_ratio][idx].ratio) best_ratio = i;
      if (table[i][idx].rayleigh > table[best_rayleigh][idx].rayleigh) best_rayleigh = i;
    }
    auto polish = [&](std::size_t i, bool ratio) {
      const double lo = h * static_cast<double>(i);
      const double hi = h * static_cast<double>(i + 2);
      const double grid_value = ratio ? table[i][idx].ratio : table[i][idx].rayleigh;
      const Extremum e = golden_section_max(
          [&](double r) {
            const auto steps = upper_chain(p, r, n);
            return ratio ? steps[idx].ratio : steps[idx].rayleigh;
          },
          lo, hi, 1e-7);
      return e.value > grid_value ? e : Extremum{h * static_cast<double>(i + 1), grid_value};
    };
    const Extremum ratio = polish(best_ratio, true);
    const Extremum rayleigh = polish(best_rayleigh, false);
    trace.upper_sequence.push_back(ratio.value);
    trace.rayleigh_sequence.push_back(rayleigh.value);
    trace.argsup.push_back(ratio.argument);
    std::vector<double> f;
    upper_chain(p, ratio.argument, n, &f, n);
    trace.test_functions.push_back(std::move(f));
  }
  return trace;
}

double variational_ratio(const RealFunction& f, const CoefficientProfile& p, VariationalForm form,
                         std::size_t resolution) {
  const auto& s = p.samples();
  const GridFunction fs = GridFunction::sample(s.grid, f);
  for (double v : fs.values()) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw InvalidTestFunction("test function must be finite and strictly positive on (0, 1)");
    }
  }
  GridFunction denominator;
  if (form == VariationalForm::primal) {
    denominator = s.scale_by_coeff(s.scale_by_coeff(fs, 1.0).right_cumulative(), -1.0).left_cumulative();
  } else {
    denominator = s.scale_by_coeff(s.scale_by_coeff(fs, -1.0).left_cumulative(), 1.0).right_cumulative();
  }
  return inf_on_unit_interval([&](double r) { return f(r) / denominator(r); }, resolution).value;
}

}  // namespace eigenbound

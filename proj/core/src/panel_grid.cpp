#include "eigenbound/panel_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "eigenbound/errors.hpp"
#include "eigenbound/geometry.hpp"
#include "eigenbound/quadrature.hpp"

namespace eigenbound {

namespace detail {

namespace {

// P_0..P_{m} at x, in long double.
std::vector<long double> legendre_values(long double x, std::size_t m) {
  std::vector<long double> p(m + 1);
  p[0] = 1.0L;
  if (m >= 1) p[1] = x;
  for (std::size_t k = 2; k <= m; ++k) {
    p[k] = ((2.0L * k - 1.0L) * x * p[k - 1] - (k - 1.0L) * p[k - 2]) / static_cast<long double>(k);
  }
  return p;
}

template <std::size_t M>
std::array<double, M> barycentric_weights(const std::array<double, M>& x) {
  std::array<double, M> w{};
  for (std::size_t j = 0; j < M; ++j) {
    long double prod = 1.0L;
    for (std::size_t k = 0; k < M; ++k) {
      if (k != j) prod *= static_cast<long double>(x[j]) - static_cast<long double>(x[k]);
    }
    w[j] = static_cast<double>(1.0L / prod);
  }
  // Rescale to keep magnitudes near 1; barycentric formulas are scale-free.
  double big = 0.0;
  for (double v : w) big = std::max(big, std::abs(v));
  for (double& v : w) v /= big;
  return w;
}

ReferencePanel build_reference() {
  constexpr std::size_t n = ReferencePanel::n;
  const auto& rule = GaussLegendre15::get();
  ReferencePanel ref{};
  ref.nodes = rule.nodes;
  ref.weights = rule.weights;

  // Lagrange basis l_j = sum_m c[j][m] P_m with c[j][m] = (2m+1)/2 W_j P_m(t_j).
  std::array<std::vector<long double>, n> p_at_node;
  for (std::size_t j = 0; j < n; ++j) p_at_node[j] = legendre_values(ref.nodes[j], n);

  for (std::size_t k = 0; k < n; ++k) {
    const long double t = ref.nodes[k];
    const auto p = legendre_values(t, n);
    // integral of P_m over [-1, t]
    std::vector<long double> lint(n);
    lint[0] = t + 1.0L;
    for (std::size_t m = 1; m < n; ++m) lint[m] = (p[m + 1] - p[m - 1]) / (2.0L * m + 1.0L);
    std::vector<long double> rint(n);
    rint[0] = 1.0L - t;
    for (std::size_t m = 1; m < n; ++m) rint[m] = -lint[m];

    for (std::size_t j = 0; j < n; ++j) {
      long double l = 0.0L;
      long double r = 0.0L;
      for (std::size_t m = 0; m < n; ++m) {
        const long double c = (2.0L * m + 1.0L) / 2.0L * ref.weights[j] * p_at_node[j][m];
        l += c * lint[m];
        r += c * rint[m];
      }
      ref.left[k][j] = static_cast<double>(l);
      ref.right[k][j] = static_cast<double>(r);
    }
  }

  ref.bary = barycentric_weights(ref.nodes);
  ref.points_edges[0] = -1.0;
  for (std::size_t j = 0; j < n; ++j) ref.points_edges[j + 1] = ref.nodes[j];
  ref.points_edges[n + 1] = 1.0;
  ref.bary_edges = barycentric_weights(ref.points_edges);
  return ref;
}

template <std::size_t M>
double barycentric(const std::array<double, M>& points, const std::array<double, M>& w,
                   const double* values, double t) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t j = 0; j < M; ++j) {
    const double diff = t - points[j];
    if (diff == 0.0) return values[j];
    const double c = w[j] / diff;
    num += c * values[j];
    den += c;
  }
  return num / den;
}

}  // namespace

const ReferencePanel& ReferencePanel::get() {
  static const ReferencePanel ref = build_reference();
  return ref;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// PanelGrid

PanelGrid::PanelGrid(std::vector<double> breakpoints) : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.size() < 2 || breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0) {
    throw DomainError("panel breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i + 1] > breakpoints_[i])) throw DomainError("panel breakpoints must increase");
  }
  const auto& ref = detail::ReferencePanel::get();
  nodes_.reserve(panels() * order);
  weights_.reserve(panels() * order);
  for (std::size_t i = 0; i < panels(); ++i) {
    const double a = breakpoints_[i];
    const double b = breakpoints_[i + 1];
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (std::size_t k = 0; k < order; ++k) {
      nodes_.push_back(mid + half * ref.nodes[k]);
      weights_.push_back(half * ref.weights[k]);
    }
  }
}

std::shared_ptr<const PanelGrid> PanelGrid::chebyshev(std::size_t panels) {
  if (panels == 0) throw DomainError("a panel grid needs at least one panel");
  std::vector<double> x(panels + 1);
  for (std::size_t i = 0; i <= panels; ++i) {
    const double s = std::sin(kHalfPi * static_cast<double>(i) / static_cast<double>(panels));
    x[i] = s * s;  // (1 - cos(i pi / N)) / 2 without cancellation
  }
  x.front() = 0.0;
  x.back() = 1.0;
  return std::shared_ptr<const PanelGrid>(new PanelGrid(std::move(x)));
}

std::shared_ptr<const PanelGrid> PanelGrid::from_breakpoints(std::vector<double> breakpoints) {
  return std::shared_ptr<const PanelGrid>(new PanelGrid(std::move(breakpoints)));
}

std::shared_ptr<const PanelGrid> PanelGrid::with_breakpoint(double x) const {
  std::vector<double> b = breakpoints_;
  if (x > 0.0 && x < 1.0 && breakpoint_index(x) == npos) {
    b.insert(std::upper_bound(b.begin(), b.end(), x), x);
  }
  return from_breakpoints(std::move(b));
}

std::size_t PanelGrid::locate(double x) const {
  if (!(x > 0.0)) return 0;
  if (x >= 1.0) return panels() - 1;
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

std::size_t PanelGrid::breakpoint_index(double x) const {
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
  if (it != breakpoints_.end() && *it == x) return static_cast<std::size_t>(it - breakpoints_.begin());
  return npos;
}

// ---------------------------------------------------------------------------
// GridFunction

double safe_product(double a, double b) noexcept {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

GridFunction::GridFunction(Grid grid, std::vector<double> values, std::vector<double> edges)
    : grid_(std::move(grid)), values_(std::move(values)), edges_(std::move(edges)) {
  if (!grid_ || values_.size() != grid_->size()) {
    throw std::invalid_argument("grid function values do not match the grid");
  }
  if (!edges_.empty() && edges_.size() != grid_->panels() + 1) {
    throw std::invalid_argument("grid function edges do not match the grid");
  }
}

GridFunction GridFunction::sample(Grid grid, const std::function<double(double)>& f) {
  std::vector<double> v(grid->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid->nodes()[i]);
  return GridFunction(std::move(grid), std::move(v));
}

GridFunction GridFunction::constant(Grid grid, double c) {
  const std::size_t n = grid->size();
  const std::size_t m = grid->panels() + 1;
  return GridFunction(std::move(grid), std::vector<double>(n, c), std::vector<double>(m, c));
}

double GridFunction::operator()(double x) const {
  const auto& ref = detail::ReferencePanel::get();
  constexpr std::size_t n = PanelGrid::order;
  const std::size_t i = grid_->locate(x);
  const double a = grid_->breakpoints()[i];
  const double b = grid_->breakpoints()[i + 1];
  const double t = std::clamp((2.0 * x - a - b) / (b - a), -1.0, 1.0);
  if (edges_.empty()) {
    return detail::barycentric(ref.nodes, ref.bary, values_.data() + i * n, t);
  }
  std::array<double, n + 2> v{};
  v[0] = edges_[i];
  std::copy_n(values_.begin() + static_cast<std::ptrdiff_t>(i * n), n, v.begin() + 1);
  v[n + 1] = edges_[i + 1];
  return detail::barycentric(ref.points_edges, ref.bary_edges, v.data(), t);
}

double GridFunction::integral() const {
  double sum = 0.0;
  const auto& w = grid_->weights();
  for (std::size_t i = 0; i < values_.size(); ++i) sum += safe_product(w[i], values_[i]);
  return sum;
}

GridFunction GridFunction::left_cumulative() const {
  const auto& ref = detail::ReferencePanel::get();
  constexpr std::size_t n = PanelGrid::order;
  const std::size_t panels = grid_->panels();
  std::vector<double> out(values_.size());
  std::vector<double> edges(panels + 1, 0.0);
  double running = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double half = 0.5 * (grid_->breakpoints()[i + 1] - grid_->breakpoints()[i]);
    const double* v = values_.data() + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += safe_product(ref.left[k][j], v[j]);
      out[i * n + k] = running + half * s;
    }
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) total += safe_product(ref.weights[j], v[j]);
    running += half * total;
    edges[i + 1] = running;
  }
  return GridFunction(grid_, std::move(out), std::move(edges));
}

GridFunction GridFunction::right_cumulative() const {
  const auto& ref = detail::ReferencePanel::get();
  constexpr std::size_t n = PanelGrid::order;
  const std::size_t panels = grid_->panels();
  std::vector<double> out(values_.size());
  std::vector<double> edges(panels + 1, 0.0);
  double running = 0.0;
  for (std::size_t i = panels; i-- > 0;) {
    const double half = 0.5 * (grid_->breakpoints()[i + 1] - grid_->breakpoints()[i]);
    const double* v = values_.data() + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += safe_product(ref.right[k][j], v[j]);
      out[i * n + k] = running + half * s;
    }
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) total += safe_product(ref.weights[j], v[j]);
    running += half * total;
    edges[i] = running;
  }
  return GridFunction(grid_, std::move(out), std::move(edges));
}

GridFunction GridFunction::map(const std::function<double(double)>& fn) const {
  std::vector<double> v(values_.size());
  std::transform(values_.begin(), values_.end(), v.begin(), fn);
  std::vector<double> e(edges_.size());
  std::transform(edges_.begin(), edges_.end(), e.begin(), fn);
  return GridFunction(grid_, std::move(v), std::move(e));
}

GridFunction GridFunction::combine(const GridFunction& a, const GridFunction& b,
                                   const std::function<double(double, double)>& fn) {
  if (a.grid_ != b.grid_ && a.grid_->breakpoints() != b.grid_->breakpoints()) {
    throw std::invalid_argument("grid functions live on different grids");
  }
  std::vector<double> v(a.values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(a.values_[i], b.values_[i]);
  std::vector<double> e;
  if (a.has_edges() && b.has_edges()) {
    e.resize(a.edges_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = fn(a.edges_[i], b.edges_[i]);
  }
  return GridFunction(a.grid_, std::move(v), std::move(e));
}

GridFunction operator*(const GridFunction& a, const GridFunction& b) {
  return GridFunction::combine(a, b, safe_product);
}

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
  return GridFunction::combine(a, b, [](double x, double y) { return x + y; });
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
  return GridFunction::combine(a, b, [](double x, double y) { return x - y; });
}

GridFunction operator*(double c, const GridFunction& a) {
  return a.map([c](double x) { return safe_product(c, x); });
}

}  // namespace eigenbound

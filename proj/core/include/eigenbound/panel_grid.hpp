#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

namespace eigenbound {

/// A partition of [0, 1] into panels, each carrying the 15 Gauss-Legendre
/// nodes. Functions sampled at the nodes are integrated and interpolated
/// spectrally panel by panel.
class PanelGrid {
 public:
  static constexpr std::size_t order = 15;

  /// Breakpoints (1 - cos(i pi / panels)) / 2, clustered at both ends.
  static std::shared_ptr<const PanelGrid> chebyshev(std::size_t panels);
  static std::shared_ptr<const PanelGrid> from_breakpoints(std::vector<double> breakpoints);

  /// The same partition with x added as a breakpoint. Returns a grid equal to
  /// this one when x already is a breakpoint (or lies outside (0, 1)).
  [[nodiscard]] std::shared_ptr<const PanelGrid> with_breakpoint(double x) const;

  [[nodiscard]] std::size_t panels() const noexcept { return breakpoints_.size() - 1; }
  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  [[nodiscard]] const std::vector<double>& nodes() const noexcept { return nodes_; }
  [[nodiscard]] const std::vector<double>& weights() const noexcept { return weights_; }

  /// Index of the panel containing x; x is clamped to [0, 1].
  [[nodiscard]] std::size_t locate(double x) const;
  /// Index of the breakpoint equal to x, or npos.
  [[nodiscard]] std::size_t breakpoint_index(double x) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  explicit PanelGrid(std::vector<double> breakpoints);

  std::vector<double> breakpoints_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Values of a function at the nodes of a PanelGrid, optionally together with
/// its values at the breakpoints ("edges"). Cumulative integrals always carry
/// edges; interpolation uses them when present.
class GridFunction {
 public:
  using Grid = std::shared_ptr<const PanelGrid>;

  GridFunction() = default;
  GridFunction(Grid grid, std::vector<double> values, std::vector<double> edges = {});

  static GridFunction sample(Grid grid, const std::function<double(double)>& f);
  static GridFunction constant(Grid grid, double c);

  [[nodiscard]] const Grid& grid() const noexcept { return grid_; }
  [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
  [[nodiscard]] const std::vector<double>& edges() const noexcept { return edges_; }
  [[nodiscard]] bool has_edges() const noexcept { return !edges_.empty(); }

  /// Polynomial interpolation inside the panel containing x.
  double operator()(double x) const;

  [[nodiscard]] double integral() const;
  /// x -> integral over [0, x].
  [[nodiscard]] GridFunction left_cumulative() const;
  /// x -> integral over [x, 1].
  [[nodiscard]] GridFunction right_cumulative() const;

  [[nodiscard]] GridFunction map(const std::function<double(double)>& fn) const;
  /// Pointwise fn(a, b); edges are kept only when both operands have them.
  static GridFunction combine(const GridFunction& a, const GridFunction& b,
                              const std::function<double(double, double)>& fn);

  /// Product with 0 * anything = 0, so infinite factors next to vanishing
  /// ones do not produce NaN.
  friend GridFunction operator*(const GridFunction& a, const GridFunction& b);
  friend GridFunction operator+(const GridFunction& a, const GridFunction& b);
  friend GridFunction operator-(const GridFunction& a, const GridFunction& b);
  friend GridFunction operator*(double c, const GridFunction& a);

 private:
  Grid grid_;
  std::vector<double> values_;
  std::vector<double> edges_;
};

double safe_product(double a, double b) noexcept;

namespace detail {

/// Reference-panel data on [-1, 1] shared by all grids.
struct ReferencePanel {
  static constexpr std::size_t n = PanelGrid::order;
  std::array<double, n> nodes;
  std::array<double, n> weights;
  /// left[k][j] = integral of the j-th Lagrange basis polynomial over [-1, t_k].
  std::array<std::array<double, n>, n> left;
  /// right[k][j] = integral of the j-th Lagrange basis polynomial over [t_k, 1].
  std::array<std::array<double, n>, n> right;
  /// Barycentric weights for the nodes alone and for {-1, nodes..., 1}.
  std::array<double, n> bary;
  std::array<double, n + 2> bary_edges;
  std::array<double, n + 2> points_edges;

  static const ReferencePanel& get();
};

}  // namespace detail

}  // namespace eigenbound

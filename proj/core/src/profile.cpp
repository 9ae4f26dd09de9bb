#include "eigenbound/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "eigenbound/errors.hpp"
#include "eigenbound/quadrature.hpp"

namespace eigenbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_add(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  if (a == kInf || b == kInf) return kInf;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

// log C(s) for the given dimension and alpha.
double log_coeff_of(int d, const Alpha& alpha, double s) {
  if (d <= 1 || alpha.is_zero()) return 0.0;
  const double x = alpha.magnitude * s;
  if (alpha.sign == CurvatureSign::negative_K) {
    return (d - 1) * (x + std::log1p(std::exp(-2.0 * x)) - std::numbers::ln2);
  }
  const double c = x <= 0.25 * kPi ? std::cos(x) : std::sin(kHalfPi - x);
  if (c <= 0.0) return -kInf;
  return (d - 1) * std::log(c);
}

// Scaled integrals: integrand exp(g(u) - m) is bounded by 1 when m bounds g.
struct ScaledIntegrator {
  QuadratureOptions options;

  double operator()(const RealFunction& g, double m, double a, double b) const {
    return integrate([&](double u) { return std::exp(g(u) - m); }, a, b, options);
  }
};

class SampleBuilder {
 public:
  SampleBuilder(int d, Alpha alpha, double tol)
      : d_(d), alpha_(alpha), integ_{QuadratureOptions{tol * 1e-3, 1e-13, 200000}} {}

  double log_c(double s) const { return log_coeff_of(d_, alpha_, s); }

  // Fill phi node values and the right edge of panel i from the left edge.
  void fill_phi_panel(SampledCoefficients& out, std::size_t i, bool spectral) const {
    const auto& grid = *out.grid;
    const auto& ref = detail::ReferencePanel::get();
    constexpr std::size_t n = PanelGrid::order;
    const double a = grid.breakpoints()[i];
    const double b = grid.breakpoints()[i + 1];
    const double half = 0.5 * (b - a);
    auto g = [this](double u) { return -log_c(u); };
    const double start = out.log_phi_edges[i];
    const double m = std::max(g(a), g(b));

    if (!std::isfinite(m)) {
      // Panel ending at the pole of 1/C: each node is integrated directly.
      for (std::size_t k = 0; k < n; ++k) {
        const double x = grid.nodes()[i * n + k];
        const double mk = std::max(g(a), g(x));
        out.log_phi[i * n + k] = log_add(start, mk + std::log(integ_(g, mk, a, x)));
      }
      out.log_phi_edges[i + 1] = kInf;
      return;
    }

    const double total = integ_(g, m, a, b);
    out.log_phi_edges[i + 1] = log_add(start, m + std::log(total));

    std::array<double, n> scaled{};
    for (std::size_t j = 0; j < n; ++j) scaled[j] = std::exp(-out.log_coeff[i * n + j] - m);
    double spectral_total = 0.0;
    for (std::size_t j = 0; j < n; ++j) spectral_total += ref.weights[j] * scaled[j];
    spectral_total *= half;
    const bool trust = spectral && std::abs(spectral_total - total) <= 1e-11 * total;

    for (std::size_t k = 0; k < n; ++k) {
      double partial;
      if (trust) {
        partial = 0.0;
        for (std::size_t j = 0; j < n; ++j) partial += ref.left[k][j] * scaled[j];
        partial *= half;
      } else {
        partial = integ_(g, m, a, grid.nodes()[i * n + k]);
      }
      out.log_phi[i * n + k] = log_add(start, m + std::log(partial));
    }
  }

  // Fill psi node values and the left edge of panel i from the right edge.
  void fill_psi_panel(SampledCoefficients& out, std::size_t i, bool spectral) const {
    const auto& grid = *out.grid;
    const auto& ref = detail::ReferencePanel::get();
    constexpr std::size_t n = PanelGrid::order;
    const double a = grid.breakpoints()[i];
    const double b = grid.breakpoints()[i + 1];
    const double half = 0.5 * (b - a);
    auto g = [this](double u) { return log_c(u); };
    const double start = out.log_psi_edges[i + 1];
    const double m = std::max(g(a), g(b));

    const double total = integ_(g, m, a, b);
    out.log_psi_edges[i] = log_add(start, m + std::log(total));

    std::array<double, n> scaled{};
    for (std::size_t j = 0; j < n; ++j) scaled[j] = std::exp(out.log_coeff[i * n + j] - m);
    double spectral_total = 0.0;
    for (std::size_t j = 0; j < n; ++j) spectral_total += ref.weights[j] * scaled[j];
    spectral_total *= half;
    const bool trust = spectral && std::abs(spectral_total - total) <= 1e-11 * total;

    for (std::size_t k = 0; k < n; ++k) {
      double partial;
      if (trust) {
        partial = 0.0;
        for (std::size_t j = 0; j < n; ++j) partial += ref.right[k][j] * scaled[j];
        partial *= half;
      } else {
        partial = integ_(g, m, grid.nodes()[i * n + k], b);
      }
      out.log_psi[i * n + k] = log_add(start, m + std::log(partial));
    }
  }

  void fill_coeff(SampledCoefficients& out) const {
    const auto& grid = *out.grid;
    out.log_coeff.resize(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) out.log_coeff[k] = log_c(grid.nodes()[k]);
    out.log_coeff_edges.resize(grid.panels() + 1);
    for (std::size_t i = 0; i <= grid.panels(); ++i) out.log_coeff_edges[i] = log_c(grid.breakpoints()[i]);
  }

  SampledCoefficients build(std::shared_ptr<const PanelGrid> grid) const {
    SampledCoefficients out;
    out.grid = std::move(grid);
    fill_coeff(out);
    const std::size_t panels = out.grid->panels();
    out.log_phi.assign(out.grid->size(), 0.0);
    out.log_psi.assign(out.grid->size(), 0.0);
    out.log_phi_edges.assign(panels + 1, -kInf);
    out.log_psi_edges.assign(panels + 1, -kInf);
    for (std::size_t i = 0; i < panels; ++i) fill_phi_panel(out, i, true);
    for (std::size_t i = panels; i-- > 0;) fill_psi_panel(out, i, true);
    return out;
  }

  // Copies every panel of `base` except the one split by r.
  SampledCoefficients refine(const SampledCoefficients& base, double r) const {
    const std::size_t split = base.grid->locate(r);
    SampledCoefficients out;
    out.grid = base.grid->with_breakpoint(r);
    if (out.grid->panels() == base.grid->panels()) return base;
    fill_coeff(out);
    constexpr std::size_t n = PanelGrid::order;
    const std::size_t panels = out.grid->panels();
    out.log_phi.assign(out.grid->size(), 0.0);
    out.log_psi.assign(out.grid->size(), 0.0);
    out.log_phi_edges.assign(panels + 1, -kInf);
    out.log_psi_edges.assign(panels + 1, -kInf);

    auto copy_panel = [&](std::size_t from, std::size_t to) {
      std::copy_n(base.log_phi.begin() + static_cast<std::ptrdiff_t>(from * n), n,
                  out.log_phi.begin() + static_cast<std::ptrdiff_t>(to * n));
      std::copy_n(base.log_psi.begin() + static_cast<std::ptrdiff_t>(from * n), n,
                  out.log_psi.begin() + static_cast<std::ptrdiff_t>(to * n));
    };
    for (std::size_t i = 0; i < split; ++i) copy_panel(i, i);
    for (std::size_t i = split + 1; i < base.grid->panels(); ++i) copy_panel(i, i + 1);
    for (std::size_t i = 0; i <= split; ++i) {
      out.log_phi_edges[i] = base.log_phi_edges[i];
      out.log_psi_edges[i] = base.log_psi_edges[i];
    }
    for (std::size_t i = split + 1; i <= base.grid->panels(); ++i) {
      out.log_phi_edges[i + 1] = base.log_phi_edges[i];
      out.log_psi_edges[i + 1] = base.log_psi_edges[i];
    }
    fill_phi_panel(out, split, false);
    fill_phi_panel(out, split + 1, false);
    fill_psi_panel(out, split + 1, false);
    fill_psi_panel(out, split, false);
    // The recomputed outer edges coincide with the copied ones up to rounding.
    out.log_phi_edges[split + 2] = base.log_phi_edges[split + 1];
    out.log_psi_edges[split] = base.log_psi_edges[split];
    return out;
  }

  const ScaledIntegrator& integrator() const { return integ_; }

 private:
  int d_;
  Alpha alpha_;
  ScaledIntegrator integ_;
};

GridFunction exp_function(const std::shared_ptr<const PanelGrid>& grid, const std::vector<double>& logs,
                          const std::vector<double>& log_edges, double sign) {
  std::vector<double> v(logs.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::exp(sign * logs[i]);
  std::vector<double> e(log_edges.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::exp(sign * log_edges[i]);
  return GridFunction(grid, std::move(v), std::move(e));
}

}  // namespace

// ---------------------------------------------------------------------------

GridFunction SampledCoefficients::coeff() const { return exp_function(grid, log_coeff, log_coeff_edges, 1.0); }
GridFunction SampledCoefficients::inverse_coeff() const {
  return exp_function(grid, log_coeff, log_coeff_edges, -1.0);
}
GridFunction SampledCoefficients::phi() const { return exp_function(grid, log_phi, log_phi_edges, 1.0); }
GridFunction SampledCoefficients::psi() const { return exp_function(grid, log_psi, log_psi_edges, 1.0); }

GridFunction SampledCoefficients::power(double c, double p, double q) const {
  std::vector<double> v(log_coeff.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    double e = 0.0;
    if (c != 0.0) e += c * log_coeff[i];
    if (p != 0.0) e += p * log_phi[i];
    if (q != 0.0) e += q * log_psi[i];
    v[i] = std::isnan(e) ? 0.0 : std::exp(e);
  }
  return GridFunction(grid, std::move(v));
}

GridFunction SampledCoefficients::scale_by_coeff(const GridFunction& g, double c) const {
  std::vector<double> v(log_coeff.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = g.values()[i];
    if (x == 0.0 || std::isnan(x)) {
      v[i] = 0.0;
      continue;
    }
    const double e = c * log_coeff[i] + std::log(std::abs(x));
    v[i] = std::copysign(std::exp(e), x);
  }
  return GridFunction(grid, std::move(v));
}

CoefficientProfile::CoefficientProfile(int d, Alpha alpha, ProfileOptions options)
    : d_(d), alpha_(alpha), options_(options) {
  if (d < 1) throw DomainError("dimension d must be >= 1");
  if (alpha.sign == CurvatureSign::positive_K && alpha.magnitude > kHalfPi) {
    throw MyersViolation("|alpha| exceeds pi/2 for K > 0");
  }
  if (d == 1) alpha_ = Alpha{};
  const SampleBuilder builder(d_, alpha_, options_.quadrature_tolerance);
  samples_ = std::make_shared<const SampledCoefficients>(builder.build(PanelGrid::chebyshev(options_.panels)));
}

double CoefficientProfile::log_coeff(double s) const { return log_coeff_of(d_, alpha_, s); }

double CoefficientProfile::coeff(double s) const {
  if (d_ <= 1 || alpha_.is_zero()) return 1.0;
  const double x = alpha_.magnitude * s;
  if (alpha_.sign == CurvatureSign::negative_K) return std::pow(std::cosh(x), d_ - 1);
  const double c = x <= 0.25 * kPi ? std::cos(x) : std::sin(kHalfPi - x);
  return std::pow(std::max(c, 0.0), d_ - 1);
}

double CoefficientProfile::inverse_coeff(double s) const { return std::exp(-log_coeff(s)); }

bool CoefficientProfile::phi_diverges() const noexcept { return samples_->log_phi_edges.back() == kInf; }

double CoefficientProfile::phi(double r) const {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("phi is defined on [0, 1]");
  const auto& s = *samples_;
  const std::size_t b = s.grid->breakpoint_index(r);
  if (b != PanelGrid::npos) {
    if (s.log_phi_edges[b] == kInf) throw DivergentIntegral("phi(1) diverges at the Myers limit");
    return std::exp(s.log_phi_edges[b]);
  }
  const std::size_t i = s.grid->locate(r);
  const double a = s.grid->breakpoints()[i];
  auto g = [this](double u) { return -log_coeff(u); };
  const double m = std::max(g(a), g(r));
  const SampleBuilder builder(d_, alpha_, options_.quadrature_tolerance);
  const double part = builder.integrator()(g, m, a, r);
  return std::exp(log_add(s.log_phi_edges[i], m + std::log(part)));
}

double CoefficientProfile::psi(double r) const {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("psi is defined on [0, 1]");
  const auto& s = *samples_;
  const std::size_t b = s.grid->breakpoint_index(r);
  if (b != PanelGrid::npos) return std::exp(s.log_psi_edges[b]);
  const std::size_t i = s.grid->locate(r);
  const double hi = s.grid->breakpoints()[i + 1];
  auto g = [this](double u) { return log_coeff(u); };
  const double m = std::max(g(r), g(hi));
  const SampleBuilder builder(d_, alpha_, options_.quadrature_tolerance);
  const double part = builder.integrator()(g, m, r, hi);
  return std::exp(log_add(s.log_psi_edges[i + 1], m + std::log(part)));
}

SampledCoefficients CoefficientProfile::with_breakpoint(double r) const {
  const SampleBuilder builder(d_, alpha_, options_.quadrature_tolerance);
  return builder.refine(*samples_, r);
}

}  // namespace eigenbound

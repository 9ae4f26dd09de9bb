#include "eigenbound/cli/figures.hpp"

#include <stdexcept>

#include "eigenbound/classical.hpp"
#include "eigenbound/cli/curves.hpp"
#include "eigenbound/cli/parallel.hpp"
#include "eigenbound/correction.hpp"
#include "eigenbound/oracle.hpp"
#include "eigenbound/version.hpp"

namespace eigenbound::cli {

namespace {

using Row = std::vector<std::optional<double>>;

CsvTable beta_table(double beta_max, const FigureOptions& o) {
  CsvTable t({"beta", "lambda0", "lower_estimate", "gap"});
  t.add_meta("operator", "d^2/dr^2 - 2 beta r d/dr, Dirichlet at 0, Neumann at 1");
  t.add_meta("lower_estimate", "pi^2/4 + beta + (10 - pi^2) beta^2");
  const std::size_t n = o.grid;
  const auto rows = parallel_map<Row>(n, [&](std::size_t i) -> Row {
    const double beta = beta_max * static_cast<double>(i + 1) / static_cast<double>(n);
    const double lambda = beta_eigenvalue(beta).lambda;
    const double est = beta_lower_estimate(beta);
    return {beta, lambda, est, lambda - est};
  });
  for (const auto& r : rows) t.add_row(r);
  return t;
}

CsvTable alpha_table(int d, const std::vector<double>& x, bool signed_axis, CurvatureSign sign,
                     const std::vector<std::string>& keys, const FigureOptions& o) {
  std::vector<std::string> columns = {signed_axis ? "x" : "alpha"};
  columns.insert(columns.end(), keys.begin(), keys.end());
  CsvTable t(columns);
  t.add_meta("d", std::to_string(d));
  if (signed_axis) t.add_meta("axis", "|alpha| = |x|, K < 0 iff x < 0");
  const auto rows = parallel_map<Row>(x.size(), [&](std::size_t i) -> Row {
    Alpha a;
    if (signed_axis) {
      a = Alpha::from_signed(x[i]);
    } else if (x[i] > 0.0) {
      a = sign == CurvatureSign::positive_K ? Alpha::positive(x[i]) : Alpha::negative(x[i]);
    }
    Row r = {x[i]};
    const auto v = evaluate_curves(d, a, keys, o.resolution);
    r.insert(r.end(), v.begin(), v.end());
    return r;
  });
  for (const auto& r : rows) t.add_row(r);
  return t;
}

}  // namespace

const std::vector<FigureInfo>& figure_catalogue() {
  static const std::vector<FigureInfo> c = {
      {1, "beta-drift principal eigenvalue, beta in (0, 1/2]"},
      {2, "beta-drift principal eigenvalue, beta in (0, 1/10]"},
      {3, "beta-drift principal eigenvalue, beta in (0, 1/50]"},
      {4, "gap over the quadratic estimate, beta in (0, 1/2]"},
      {5, "gap over the quadratic estimate, beta in (0, 1/20]"},
      {6, "M_alpha, x in [-10, pi/2]"},
      {7, "lambda-bar estimates, d = 2, K >= 0"},
      {8, "lambda-bar estimates, d = 2, K <= 0"},
      {9, "lambda-bar estimates, d = 5, x in [-2.5, pi/2]"},
  };
  return c;
}

CsvTable figure_table(int id, const FigureOptions& o) {
  if (o.grid == 0) throw std::invalid_argument("grid must be positive");
  CsvTable t = [&]() -> CsvTable {
    switch (id) {
      case 1: return beta_table(0.5, o);
      case 2: return beta_table(0.1, o);
      case 3: return beta_table(0.02, o);
      case 4: return beta_table(0.5, o);
      case 5: return beta_table(0.05, o);
      case 6: return alpha_table(2, linspace(-10.0, kHalfPi, o.grid), true, CurvatureSign::zero, {"m_alpha"}, o);
      case 7:
        return alpha_table(2, linspace(0.0, kHalfPi, o.grid), false, CurvatureSign::positive_K,
                           {"inv_delta1_star", "inv_delta1_star_prime", "inv_delta1", "middle", "sphere_comparison",
                            "combined", "oracle"},
                           o);
      case 8:
        return alpha_table(2, linspace(0.0, 6.0, o.grid), false, CurvatureSign::negative_K,
                           {"inv_delta1_star", "inv_delta1_prime", "middle", "cosh_decay", "sech_fixed_point",
                            "combined", "oracle"},
                           o);
      case 9:
        return alpha_table(5, linspace(-2.5, kHalfPi, o.grid), true, CurvatureSign::zero,
                           {"inv_delta1_star", "inv_delta1_prime", "inv_delta1_star_prime", "middle",
                            "sphere_comparison", "cosh_decay", "sech_fixed_point", "combined", "oracle"},
                           o);
      default: throw std::invalid_argument("figure id must be in 1..9");
    }
  }();
  t.add_meta("figure", std::to_string(id) + " " + figure_catalogue()[id - 1].title);
  t.add_meta("command", o.command_line);
  t.add_meta("version", kVersion);
  t.add_meta("scale", id == 6 ? "dimensionless" : "lambda-bar");
  return t;
}

}  // namespace eigenbound::cli

#include "eigenbound/cli/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <json.hpp>

#include "eigenbound/classical.hpp"
#include "eigenbound/correction.hpp"
#include "eigenbound/errors.hpp"
#include "eigenbound/oracle.hpp"
#include "eigenbound/profile.hpp"
#include "eigenbound/universal.hpp"
#include "eigenbound/version.hpp"

namespace eigenbound::cli {

namespace {

constexpr double kPi2Over4 = kPi * kPi / 4.0;

struct Tally {
  CheckRecord rec;
  explicit Tally(std::string name) { rec.name = std::move(name); }
  // Records one comparison; `excess` > 0 means a violation of that size.
  void point(double excess, const std::string& where = {}) {
    ++rec.points;
    if (!(excess <= 0.0)) {
      ++rec.violations;
      if (rec.detail.empty() && !where.empty()) rec.detail = "first violation at " + where;
    }
    if (std::isnan(excess) || excess > rec.worst) rec.worst = excess;
  }
  void near(double got, double want, double tol, const std::string& where = {}) {
    ++rec.points;
    const double err = std::abs(got - want);
    if (!(err <= tol)) {
      ++rec.violations;
      if (rec.detail.empty()) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: got %.15g, expected %.15g", where.c_str(), got, want);
        rec.detail = buf;
      }
    }
    if (std::isnan(err) || err > rec.worst) rec.worst = err;
  }
  CheckRecord done() {
    rec.passed = rec.violations == 0 && rec.points > 0;
    return rec;
  }
};

std::string at(int d, const Alpha& a) { return "d=" + std::to_string(d) + ", alpha=" + to_string(a); }

std::vector<Alpha> alpha_grid(std::size_t per_sign, double neg_max, double pos_max) {
  std::vector<Alpha> out;
  for (std::size_t i = 1; i <= per_sign; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(per_sign);
    out.push_back(Alpha::negative(neg_max * t));
    out.push_back(Alpha::positive(pos_max * t));
  }
  return out;
}

CheckRecord check_flat_example() {
  Tally t("flat_example");
  const CoefficientProfile p(2, Alpha{});
  const BoundBracket b = delta_bracket(p);
  const double d1 = std::cbrt(5.0) / 4.0;
  t.near(b.delta, 0.25, 1e-6, "delta");
  t.near(b.delta1_prime, 0.375, 1e-6, "delta1'");
  t.near(b.delta1_star_prime, 0.375, 1e-6, "delta1*'");
  t.near(b.delta1, d1, 1e-6, "delta1");
  t.near(b.delta1_star, d1, 1e-6, "delta1*");
  const double lam = bar_lambda(2, Alpha{}).lambda;
  t.near(lam, kPi2Over4, 1e-9, "bar_lambda");
  t.near(1.0 / lam, 0.405, 1e-3, "1/bar_lambda");
  t.point(b.delta - b.delta1_prime, "ordering delta < delta1'");
  t.point(b.delta1_prime - 1.0 / lam, "ordering delta1' < 1/bar_lambda");
  t.point(1.0 / lam - b.delta1, "ordering 1/bar_lambda < delta1");
  return t.done();
}

CheckRecord check_beta(std::size_t n) {
  Tally t("beta_operator");
  t.near(beta_eigenvalue(0.0).lambda, kPi2Over4, 1e-8, "beta=0");
  t.near(beta_eigenvalue(0.5).lambda, 3.0, 1e-8, "beta=1/2");
  t.near(beta_eigenvalue(-0.5).lambda, 2.0, 1e-8, "beta=-1/2");
  for (std::size_t i = 1; i <= n; ++i) {
    const double beta = 0.5 * static_cast<double>(i) / static_cast<double>(n);
    const double gap = beta_eigenvalue(beta).lambda - beta_lower_estimate(beta);
    t.point(-gap - 1e-8, "beta=" + std::to_string(beta));
  }
  return t.done();
}

CheckRecord check_m_alpha(std::size_t n) {
  Tally t("m_alpha");
  t.near(m_alpha(Alpha{}), 1.0, 1e-10, "M_0");
  for (const Alpha& a : alpha_grid(n, 10.0, 1.57)) {
    const double m = m_alpha(a);
    t.point(a.sign == CurvatureSign::negative_K ? m - 1.0 : 1.0 - m, at(0, a));
    t.near(kPi2Over4 * HAlphaKernel(a).at_zero(), m, 1e-9, "h_alpha(0) at " + at(0, a));
  }
  return t.done();
}

CheckRecord check_duality(const std::vector<int>& dims, std::size_t per_sign) {
  Tally t("duality");
  for (int d : dims) {
    for (const Alpha& a : alpha_grid(per_sign, 4.0, 1.5)) {
      const double p = principal_eigenvalue(primal_problem(d, a)).lambda;
      const double q = principal_eigenvalue(dual_problem(d, a)).lambda;
      t.near(p, q, 1e-9, at(d, a));
    }
  }
  return t.done();
}

CheckRecord check_sandwich(const std::vector<int>& dims, std::size_t per_sign) {
  Tally t("sandwich");
  std::size_t grid = 0;
  for (int d : dims) {
    for (const Alpha& a : alpha_grid(per_sign, 4.0, 1.5)) {
      ++grid;
      const GeometryTriple g = triple_from_alpha(d, a, 1.0);
      const CoefficientProfile p(d, a);
      const BoundBracket b = delta_bracket(p);
      const double lam = bar_lambda(d, a).lambda;
      const double top = 4.0 * lam / (g.D * g.D) + 1e-6;
      for (EstimateId id : kAllEstimates) {
        if (estimate_applies(id, g)) t.point(evaluate(id, g) - top, estimate_key(id) + " at " + at(d, a));
      }
      t.point(4.0 * b.lower_for_barlambda - top, "delta lower at " + at(d, a));
      t.point(corrected_shi_zhang(g) - top, "corrected Shi-Zhang at " + at(d, a));
      t.point(combined_bound(g, b.delta1_star).value - top, "combined at " + at(d, a));
      t.point(lam - b.upper_for_barlambda - 1e-6, "delta upper at " + at(d, a));
    }
  }
  t.rec.detail = "grid points: " + std::to_string(grid) + (t.rec.detail.empty() ? "" : "; " + t.rec.detail);
  return t.done();
}

CheckRecord check_dominance() {
  Tally t("dominance");
  for (int d : {2, 3, 5, 10}) {
    for (double K : {0.1, 0.5, 1.0, 2.0, 4.0}) {
      const GeometryTriple g{d, 1.0, K};
      if (K * g.D * g.D > (d - 1) * kPi * kPi) continue;
      t.point(bbg(g) - sphere_comparison(g) - 1e-12, "BBG <= sphere comparison");
      t.point(lichnerowicz(g) - bbg(g) - 1e-12, "Lichnerowicz <= BBG");
    }
  }
  for (double K : {-20.0, -4.0, -1.0, 0.0, 1.0, 4.0, 9.0}) {
    const GeometryTriple g{2, 1.0, K};
    t.point(linear_combo(g) - shi_zhang(g) - 1e-12, "linear <= Shi-Zhang, K=" + std::to_string(K));
    if (std::abs(K) <= 4.0) t.point(shi_zhang(g) - quadratic_estimate(g) - 1e-12, "Shi-Zhang <= quadratic");
  }
  t.near(sphere_comparison({3, 1.0, 1e-12}), 8.0, 1e-6, "sphere comparison limit at K -> 0");
  return t.done();
}

CheckRecord check_iterations(bool full) {
  Tally t("iteration_monotonicity");
  std::vector<Alpha> alphas = {Alpha{}};
  if (full) {
    for (double x : {-3.0, -1.0, 0.5, 1.0, 1.5}) alphas.push_back(Alpha::from_signed(x));
  }
  const int n = full ? 4 : 3;
  for (const Alpha& a : alphas) {
    const CoefficientProfile p(3, a);
    const IterationTrace lo = iterate_lower(p, n);
    const IterationTrace up = iterate_upper(p, n);
    for (int k = 1; k < n; ++k) {
      t.point(1.0 / lo.lower_sequence[k - 1] - 1.0 / lo.lower_sequence[k] - 1e-9, "lower n=" + std::to_string(k));
      t.point(1.0 / up.upper_sequence[k] - 1.0 / up.upper_sequence[k - 1] - 1e-9, "upper n=" + std::to_string(k));
    }
    t.near(up.rayleigh_sequence[0], up.upper_sequence[0], 1e-6, "delta-bar_1 vs delta_1' " + at(3, a));
  }
  if (full) {
    const CoefficientProfile p(2, Alpha{});
    t.near(1.0 / iterate_lower(p, 6).lower_sequence.back(), kPi2Over4, 1e-3, "1/delta_6 at K=0");
    t.near(1.0 / iterate_upper(p, 6).upper_sequence.back(), kPi2Over4, 1e-3, "1/delta_6' at K=0");
  }
  return t.done();
}

CheckRecord check_gradient_identity(bool full) {
  Tally t("gradient_identity");
  std::vector<int> dims = full ? std::vector<int>{2, 5} : std::vector<int>{2};
  std::vector<double> mags = full ? std::vector<double>{0.5, 1.0, 2.0} : std::vector<double>{1.0};
  std::vector<double> ss = full ? std::vector<double>{0.3, 0.5, 0.7} : std::vector<double>{0.5};
  for (int d : dims) {
    for (double m : mags) {
      for (double s : ss) {
        const auto r = gradient_identity_residual(d, Alpha::negative(m), s);
        const std::string w = at(d, Alpha::negative(m)) + ", s=" + std::to_string(s);
        t.point(r.residual - 1e-6, "residual " + w);
        t.point(std::abs(r.g_prime_at_0) - 1e-6, "g'(0) " + w);
        t.point(std::abs(r.g_at_1) - 1e-6, "g(1) " + w);
      }
    }
  }
  return t.done();
}

CheckRecord check_alpha0() {
  Tally t("alpha0");
  const double a0 = alpha0_root(2);
  t.point(0.95 - a0, "alpha0(2) >= 0.95");
  t.point(a0 - 0.99, "alpha0(2) <= 0.99");
  t.near(alpha0_equation(2, a0), 0.0, 1e-10, "clamp equation residual");
  return t.done();
}

CheckRecord check_extremum(std::size_t n) {
  Tally t("h_alpha_extremum");
  const ExtremumCheck c = check_h_alpha_extremum(n, n);
  t.point(c.worst_violation - 1e-9, "alpha=" + to_string(c.worst_alpha) + ", x=" + std::to_string(c.worst_x));
  t.rec.points = c.alpha_points * c.x_points * 2;
  return t.done();
}

CheckRecord check_crossover(std::size_t n) {
  Tally t("crossover");
  // With D = 2 both sides are on the lambda-bar scale.
  for (int d : {2, 3, 4, 5, 6, 7, 10, 11, 12}) {
    for (std::size_t i = 0; i <= n; ++i) {
      const double K = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n);
      const GeometryTriple g{d, 2.0, K};
      const double middle = combined_middle_term(d, make_alpha(g));
      const double quadratic = quadratic_estimate(g);
      const double excess = d <= 7 ? quadratic - middle : middle - quadratic;
      t.point(excess - 1e-9, "d=" + std::to_string(d) + ", K=" + std::to_string(K));
    }
  }
  return t.done();
}

CheckRecord check_half_pi() {
  Tally t("half_pi_endpoint");
  const std::pair<int, double> ratios[] = {{2, 1.2}, {5, 1.27}, {63, 1.334}};
  for (const auto& [d, want] : ratios) {
    const CoefficientProfile p(d, Alpha::positive(kHalfPi));
    t.near(delta1_star(p).value / delta1_star_prime(p).value, want, 0.01, "ratio d=" + std::to_string(d));
  }
  t.near(bar_lambda(63, Alpha::positive(kHalfPi)).lambda, 155.0, 1.0, "bar_lambda d=63");
  t.near(gamma_zero(), 0.39, 0.005, "gamma_0");
  for (int d = 2; d <= 12; ++d) {
    const Alpha a = Alpha::positive(kHalfPi);
    const double lam = bar_lambda(d, a).lambda;
    const double e0 = epsilon_mean(d, a, MeanAnchor::at_zero).epsilon;
    const double e1 = epsilon_mean(d, a, MeanAnchor::at_half_pi).epsilon;
    t.point(lam - 0.056 - e1, "eps_pi/2 >= bar_lambda - 0.056, d=" + std::to_string(d));
    t.point(e1 - lam - 1e-6, "eps_pi/2 <= bar_lambda, d=" + std::to_string(d));
    t.point(lam - e0 - 1e-6, "bar_lambda <= eps_0, d=" + std::to_string(d));
    t.point(e0 - lam - 1.85, "eps_0 <= bar_lambda + 1.85, d=" + std::to_string(d));
  }
  return t.done();
}

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

VerifyReport run_verify(Suite suite, const std::function<void(const CheckRecord&)>& progress) {
  const bool full = suite == Suite::full;
  std::vector<std::pair<std::string, std::function<CheckRecord()>>> plan = {
      {"flat_example", check_flat_example},
      {"beta_operator", [full] { return check_beta(full ? 50 : 10); }},
      {"m_alpha", [full] { return check_m_alpha(full ? 20 : 5); }},
      {"duality",
       [full] {
         return full ? check_duality({2, 3, 5, 10}, 5) : check_duality({2, 5}, 2);
       }},
      {"sandwich", [full] { return full ? check_sandwich({2, 3, 5, 10}, 5) : check_sandwich({2, 5}, 2); }},
      {"dominance", check_dominance},
      {"iteration_monotonicity", [full] { return check_iterations(full); }},
      {"gradient_identity", [full] { return check_gradient_identity(full); }},
      {"alpha0", check_alpha0},
      {"h_alpha_extremum", [full] { return check_extremum(full ? 200 : 20); }},
      {"crossover", [full] { return check_crossover(full ? 40 : 8); }},
  };
  if (full) plan.emplace_back("half_pi_endpoint", check_half_pi);

  VerifyReport out;
  out.suite = suite;
  for (const auto& [name, fn] : plan) {
    const auto start = std::chrono::steady_clock::now();
    CheckRecord rec;
    try {
      rec = fn();
    } catch (const std::exception& e) {
      rec.name = name;
      rec.passed = false;
      rec.detail = std::string("exception: ") + e.what();
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (progress) progress(rec);
    out.checks.push_back(std::move(rec));
  }
  return out;
}

void render_verify(const VerifyReport& r, std::ostream& os) {
  for (const auto& c : r.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(24) << c.name << " points=" << c.points
       << " violations=" << c.violations << " worst=" << c.worst;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
  }
  os << (r.passed() ? "all checks passed" : "some checks failed") << '\n';
}

std::string verify_json(const VerifyReport& r) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["suite"] = r.suite == Suite::full ? "full" : "fast";
  j["passed"] = r.passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"passed", c.passed},
                           {"points", c.points},
                           {"violations", c.violations},
                           {"worst", std::isfinite(c.worst) ? nlohmann::json(c.worst) : nlohmann::json(nullptr)},
                           {"detail", c.detail},
                           {"seconds", c.seconds}});
  }
  return j.dump(2);
}

}  // namespace eigenbound::cli

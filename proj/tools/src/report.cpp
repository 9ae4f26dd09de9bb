#include "eigenbound/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>

#include "eigenbound/classical.hpp"
#include "eigenbound/cli/csv.hpp"
#include "eigenbound/errors.hpp"
#include "eigenbound/profile.hpp"
#include "eigenbound/version.hpp"

namespace eigenbound::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSandwichSlack = 1e-6;

ReportRow row(std::string key, std::string name, double value, bool clamped = false, std::string note = {}) {
  return ReportRow{std::move(key), std::move(name), value, std::isfinite(value), clamped, std::move(note)};
}

ReportRow invalid(std::string key, std::string name, std::string note) {
  return ReportRow{std::move(key), std::move(name), kNaN, false, false, std::move(note)};
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

BoundReport build_report(const GeometryTriple& g, const ReportOptions& options) {
  BoundReport r;
  r.input = g;
  r.alpha = make_alpha(g);
  const double scale = 4.0 / (g.D * g.D);

  for (EstimateId id : kAllEstimates) {
    if (!estimate_applies(id, g)) {
      r.rows.push_back(invalid(estimate_key(id), estimate_name(id), "outside validity range"));
      continue;
    }
    try {
      r.rows.push_back(row(estimate_key(id), estimate_name(id), evaluate(id, g)));
    } catch (const Error& e) {
      r.rows.push_back(invalid(estimate_key(id), estimate_name(id), e.what()));
    }
  }

  const CoefficientProfile profile(g.d, r.alpha);
  r.bracket = delta_bracket(profile, options.resolution);
  r.rows.push_back(row("delta_lower", "delta bracket, lower end", scale * r.bracket.lower_for_barlambda));

  if (g.d >= 2) {
    const CorrectionResult c = correction(g.d, r.alpha);
    r.rows.push_back(row("corrected_shi_zhang", "Shi-Zhang with K M_alpha", corrected_shi_zhang(g), c.clamped));
    r.combined = combined_bound(g, r.bracket.delta1_star);
    r.rows.push_back(row("combined", "combined (" + to_string(r.combined.winner) + ")", r.combined.value,
                         r.combined.correction.clamped));
  } else {
    r.rows.push_back(invalid("corrected_shi_zhang", "Shi-Zhang with K M_alpha", "needs d >= 2"));
    r.rows.push_back(invalid("combined", "combined", "needs d >= 2"));
  }

  r.best_name.clear();
  r.best_value = 0.0;
  for (const auto& x : r.rows) {
    if (!x.valid) continue;
    const double v = std::max(0.0, x.value);
    if (r.best_name.empty() || v > r.best_value) {
      r.best_value = v;
      r.best_name = x.key;
    }
  }

  if (options.oracle) {
    SolverOptions so;
    so.tol = options.tol;
    so.scan_upper = 4.0 * r.bracket.upper_for_barlambda + 10.0;
    const EigenResult e = bar_lambda(g.d, r.alpha, so);
    OracleSummary o;
    o.bar_lambda = e.lambda;
    o.lambda1_lower = scale * e.lambda;
    o.boundary_mismatch = e.boundary_mismatch;
    for (const auto& x : r.rows) {
      if (x.valid && x.value > o.lambda1_lower + kSandwichSlack) ++o.sandwich_violations;
    }
    o.bracket_consistent = r.bracket.lower_for_barlambda <= e.lambda + kSandwichSlack &&
                           e.lambda <= r.bracket.upper_for_barlambda + kSandwichSlack;
    r.oracle = o;
  }
  return r;
}

void render_table(const BoundReport& r, std::ostream& os) {
  os << "d = " << r.input.d << ", D = " << fmt(r.input.D) << ", K = " << fmt(r.input.K)
     << ", alpha = " << to_string(r.alpha) << "\n";
  os << "lower bounds for lambda_1:\n";
  for (const auto& x : r.rows) {
    os << "  " << std::left << std::setw(22) << x.key << std::setw(34) << x.name;
    if (x.valid) {
      os << fmt(x.value);
      if (x.clamped) os << "  (alpha clamped to alpha_0)";
    } else {
      os << "n/a  " << x.note;
    }
    os << '\n';
  }
  const double s = 4.0 / (r.input.D * r.input.D);
  os << "delta quantities (lambda-bar scale):\n"
     << "  delta = " << fmt(r.bracket.delta) << ", delta1 = " << fmt(r.bracket.delta1)
     << ", delta1' = " << fmt(r.bracket.delta1_prime) << ", delta1* = " << fmt(r.bracket.delta1_star)
     << ", delta1*' = " << fmt(r.bracket.delta1_star_prime) << '\n'
     << "  bar_lambda in [" << fmt(r.bracket.lower_for_barlambda) << ", " << fmt(r.bracket.upper_for_barlambda)
     << "]\n"
     << "  lambda_1 bracket from it: [" << fmt(s * r.bracket.lower_for_barlambda) << ", "
     << fmt(s * r.bracket.upper_for_barlambda) << "]\n";
  os << "best lower bound: " << fmt(r.best_value) << " (" << r.best_name << ")\n";
  if (r.oracle) {
    const auto& o = *r.oracle;
    os << "oracle: bar_lambda = " << fmt(o.bar_lambda) << ", 4 bar_lambda/D^2 = " << fmt(o.lambda1_lower)
       << ", mismatch = " << fmt(o.boundary_mismatch) << '\n'
       << "  sandwich violations: " << o.sandwich_violations
       << ", delta bracket contains bar_lambda: " << (o.bracket_consistent ? "yes" : "no") << '\n';
  }
}

void render_csv(const BoundReport& r, std::ostream& os, const std::string& command_line) {
  CsvTable t({"d", "D", "K", "alpha_signed", "value", "valid", "clamped"});
  t.add_meta("command", command_line);
  t.add_meta("version", kVersion);
  t.add_meta("scale", "lambda_1");
  std::string keys;
  for (const auto& x : r.rows) keys += (keys.empty() ? "" : ";") + x.key;
  t.add_meta("rows", keys);
  if (r.oracle) {
    t.add_meta("bar_lambda", format_double(r.oracle->bar_lambda));
    t.add_meta("oracle_lambda1_lower", format_double(r.oracle->lambda1_lower));
  }
  t.add_meta("best", r.best_name + "=" + format_double(r.best_value));
  for (const auto& x : r.rows) {
    t.add_row({double(r.input.d), r.input.D, r.input.K, r.alpha.signed_value(),
               x.valid ? std::optional<double>(x.value) : std::nullopt, x.valid ? 1.0 : 0.0, x.clamped ? 1.0 : 0.0});
  }
  t.write(os);
}

}  // namespace eigenbound::cli

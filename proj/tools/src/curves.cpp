#include "eigenbound/cli/curves.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <stdexcept>

#include "eigenbound/classical.hpp"
#include "eigenbound/correction.hpp"
#include "eigenbound/errors.hpp"
#include "eigenbound/oracle.hpp"
#include "eigenbound/profile.hpp"
#include "eigenbound/universal.hpp"

namespace eigenbound::cli {

namespace {

// At D = 2 the factor 4/D^2 is 1, so lambda_1-scale estimates read directly
// as lambda-bar-scale values.
constexpr double kUnitScaleDiameter = 2.0;

std::vector<std::string> build_keys() {
  std::vector<std::string> keys = {"inv_delta1",  "inv_delta1_prime", "inv_delta1_star", "inv_delta1_star_prime",
                                   "delta_lower", "delta_upper",      "delta_star_ratio", "m_alpha",
                                   "middle",      "combined",         "corrected_shi_zhang"};
  for (EstimateId id : kAllEstimates) keys.push_back(estimate_key(id));
  keys.push_back("oracle");
  return keys;
}

double inverse(double delta) { return delta == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / delta; }

struct PointContext {
  int d;
  Alpha alpha;
  std::size_t resolution;
  std::unique_ptr<CoefficientProfile> profile;
  std::optional<BoundBracket> bracket;

  const BoundBracket& get_bracket() {
    if (!bracket) {
      profile = std::make_unique<CoefficientProfile>(d, alpha);
      bracket = delta_bracket(*profile, resolution);
    }
    return *bracket;
  }

  GeometryTriple triple() const { return triple_from_alpha(d, alpha, kUnitScaleDiameter); }

  double value(const std::string& key) {
    if (key == "inv_delta1") return inverse(get_bracket().delta1);
    if (key == "inv_delta1_prime") return inverse(get_bracket().delta1_prime);
    if (key == "inv_delta1_star") return inverse(get_bracket().delta1_star);
    if (key == "inv_delta1_star_prime") return inverse(get_bracket().delta1_star_prime);
    if (key == "delta_lower") return get_bracket().lower_for_barlambda;
    if (key == "delta_upper") return get_bracket().upper_for_barlambda;
    if (key == "delta_star_ratio") return get_bracket().delta1_star / get_bracket().delta1_star_prime;
    if (key == "m_alpha") return m_alpha(alpha);
    if (key == "middle") return combined_middle_term(d, alpha);
    if (key == "combined") return combined_bound(triple(), get_bracket().delta1_star).value;
    if (key == "corrected_shi_zhang") return corrected_shi_zhang(triple());
    if (key == "oracle") {
      SolverOptions so;
      so.scan_upper = 4.0 * get_bracket().upper_for_barlambda + 10.0;
      return bar_lambda(d, alpha, so).lambda;
    }
    for (EstimateId id : kAllEstimates) {
      if (key != estimate_key(id)) continue;
      const GeometryTriple g = triple();
      if (!estimate_applies(id, g)) throw DomainError(key + " does not apply");
      return evaluate(id, g);
    }
    throw DomainError("unknown curve key " + key);
  }
};

}  // namespace

const std::vector<std::string>& curve_keys() {
  static const std::vector<std::string> keys = build_keys();
  return keys;
}

bool is_curve_key(const std::string& key) {
  const auto& k = curve_keys();
  return std::find(k.begin(), k.end(), key) != k.end();
}

std::vector<std::optional<double>> evaluate_curves(int d, const Alpha& alpha, const std::vector<std::string>& keys,
                                                   std::size_t resolution) {
  for (const auto& key : keys) {
    if (!is_curve_key(key)) throw std::invalid_argument("unknown curve key '" + key + "'");
  }
  PointContext ctx{d, alpha, resolution, nullptr, std::nullopt};
  std::vector<std::optional<double>> out;
  out.reserve(keys.size());
  for (const auto& key : keys) {
    try {
      out.emplace_back(ctx.value(key));
    } catch (const DomainError&) {
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {lo};
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  out.back() = hi;
  return out;
}

}  // namespace eigenbound::cli

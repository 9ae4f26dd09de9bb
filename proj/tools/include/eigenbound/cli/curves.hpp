#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eigenbound/geometry.hpp"

namespace eigenbound::cli {

/// Every curve key understood by figure and sweep, in display order.
const std::vector<std::string>& curve_keys();
bool is_curve_key(const std::string& key);

/// Values of the requested curves at (d, alpha) on the lambda-bar scale, so
/// lambda_1 >= 4 value / D^2 for every lower-bound curve. A key that does not
/// apply at this point, or whose evaluation raises a domain error, yields an
/// empty value.
std::vector<std::optional<double>> evaluate_curves(int d, const Alpha& alpha, const std::vector<std::string>& keys,
                                                   std::size_t resolution = 2001);

/// n evenly spaced points on [lo, hi], both ends included (n >= 2), or the
/// single point lo when n == 1.
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace eigenbound::cli

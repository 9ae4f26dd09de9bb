#pragma once

#include <string>
#include <vector>

#include "eigenbound/cli/csv.hpp"

namespace eigenbound::cli {

/// A grid over dimensions and the signed alpha axis x (|alpha| = |x|,
/// K < 0 iff x < 0). Points with x > pi/2 violate the Myers bound and are
/// rejected by validate().
struct SweepConfig {
  std::vector<int> dimensions = {2};
  double x_min = -2.5;
  double x_max = 1.5707963267948966;
  std::size_t count = 200;
  std::vector<std::string> estimates = {"combined"};
  std::string output = "sweep";
  std::size_t resolution = 2001;
  std::string command_line;
};

/// Throws std::invalid_argument for an empty grid, d < 1, x_max above pi/2,
/// x_min > x_max or an unknown estimate key.
void validate(const SweepConfig& config);

/// One table per dimension, columns x followed by the estimates.
std::vector<CsvTable> sweep_tables(const SweepConfig& config);

/// Writes <output>_d<d>.csv for every dimension and returns the paths.
std::vector<std::string> run_sweep(const SweepConfig& config);

}  // namespace eigenbound::cli

#pragma once

#include <string>
#include <vector>

#include "eigenbound/cli/csv.hpp"

namespace eigenbound::cli {

struct FigureOptions {
  std::size_t grid = 200;
  std::size_t resolution = 2001;
  std::string command_line;
};

struct FigureInfo {
  int id;
  std::string title;
};

const std::vector<FigureInfo>& figure_catalogue();

/// Data behind figure `id` (1..9). Throws std::invalid_argument otherwise.
///   1-3: principal eigenvalue of d^2/dr^2 - 2 beta r d/dr on three beta ranges
///   4-5: its gap over the quadratic lower estimate on two beta ranges
///   6:   M_alpha over x in [-10, pi/2]
///   7:   lambda-bar estimates, d = 2, K >= 0, |alpha| in [0, pi/2]
///   8:   lambda-bar estimates, d = 2, K <= 0, |alpha| in [0, 6]
///   9:   lambda-bar estimates, d = 5, x in [-2.5, pi/2]
/// The x axis of 6 and 9 is the signed alpha: |alpha| = |x|, K < 0 iff x < 0.
CsvTable figure_table(int id, const FigureOptions& options);

}  // namespace eigenbound::cli

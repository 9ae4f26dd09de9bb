#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "eigenbound/correction.hpp"
#include "eigenbound/geometry.hpp"
#include "eigenbound/oracle.hpp"
#include "eigenbound/universal.hpp"

namespace eigenbound::cli {

struct ReportRow {
  std::string key;
  std::string name;
  double value = 0.0;  // lambda_1 scale; NaN when not valid
  bool valid = false;
  bool clamped = false;
  std::string note;
};

struct OracleSummary {
  double bar_lambda = 0.0;
  double lambda1_lower = 0.0;  // 4 bar_lambda / D^2
  double boundary_mismatch = 0.0;
  std::size_t sandwich_violations = 0;
  bool bracket_consistent = false;
};

struct BoundReport {
  GeometryTriple input;
  Alpha alpha;
  std::vector<ReportRow> rows;
  BoundBracket bracket;
  CombinedResult combined;
  std::optional<OracleSummary> oracle;
  std::string best_name;
  double best_value = 0.0;
};

struct ReportOptions {
  bool oracle = false;
  double tol = 1e-12;
  std::size_t resolution = 2001;
};

/// Evaluates every estimate at g. Values are converted to the lambda_1 scale
/// with the factor 4/D^2; nothing else is computed here.
BoundReport build_report(const GeometryTriple& g, const ReportOptions& options = {});

void render_table(const BoundReport& r, std::ostream& os);
void render_csv(const BoundReport& r, std::ostream& os, const std::string& command_line);

}  // namespace eigenbound::cli

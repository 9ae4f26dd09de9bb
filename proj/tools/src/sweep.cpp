#include "eigenbound/cli/sweep.hpp"

#include <algorithm>
#include <stdexcept>

#include "eigenbound/cli/curves.hpp"
#include "eigenbound/cli/parallel.hpp"
#include "eigenbound/geometry.hpp"
#include "eigenbound/version.hpp"

namespace eigenbound::cli {

void validate(const SweepConfig& config) {
  if (config.dimensions.empty()) throw std::invalid_argument("sweep needs at least one dimension");
  for (int d : config.dimensions) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  }
  if (config.count == 0) throw std::invalid_argument("sweep needs at least one point");
  if (!(config.x_min <= config.x_max)) throw std::invalid_argument("x_min must not exceed x_max");
  if (config.x_max > kHalfPi + 1e-12) throw std::invalid_argument("x_max exceeds pi/2 (Myers bound)");
  if (config.estimates.empty()) throw std::invalid_argument("sweep needs at least one estimate");
  for (const auto& k : config.estimates) {
    if (!is_curve_key(k)) throw std::invalid_argument("unknown estimate key '" + k + "'");
  }
}

std::vector<CsvTable> sweep_tables(const SweepConfig& config) {
  validate(config);
  const std::vector<double> xs = linspace(config.x_min, std::min(config.x_max, kHalfPi), config.count);
  std::vector<CsvTable> out;
  for (int d : config.dimensions) {
    std::vector<std::string> columns = {"x"};
    columns.insert(columns.end(), config.estimates.begin(), config.estimates.end());
    CsvTable t(columns);
    t.add_meta("command", config.command_line);
    t.add_meta("version", kVersion);
    t.add_meta("scale", "lambda-bar");
    t.add_meta("d", std::to_string(d));
    t.add_meta("axis", "|alpha| = |x|, K < 0 iff x < 0");
    using Row = std::vector<std::optional<double>>;
    const auto rows = parallel_map<Row>(xs.size(), [&](std::size_t i) -> Row {
      Row r = {xs[i]};
      const auto v = evaluate_curves(d, Alpha::from_signed(xs[i]), config.estimates, config.resolution);
      r.insert(r.end(), v.begin(), v.end());
      return r;
    });
    for (const auto& r : rows) t.add_row(r);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::string> run_sweep(const SweepConfig& config) {
  const auto tables = sweep_tables(config);
  std::vector<std::string> paths;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const std::string path = config.output + "_d" + std::to_string(config.dimensions[i]) + ".csv";
    tables[i].write_file(path);
    paths.push_back(path);
  }
  return paths;
}

}  // namespace eigenbound::cli

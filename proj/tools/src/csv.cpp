#include "eigenbound/cli/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace eigenbound::cli {

CsvTable::CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvTable::add_meta(const std::string& key, const std::string& value) { meta_.emplace_back(key, value); }

void CsvTable::add_row(const std::vector<std::optional<double>>& values) {
  if (values.size() != columns_.size()) throw std::invalid_argument("CSV row width does not match the header");
  rows_.push_back(values);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void CsvTable::write(std::ostream& os) const {
  // command and version lead, the rest keep insertion order
  auto ordered = meta_;
  std::stable_partition(ordered.begin(), ordered.end(),
                        [](const auto& kv) { return kv.first == "command" || kv.first == "version"; });
  for (const auto& [k, v] : ordered) os << "# " << k << ": " << v << '\n';
  for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << columns_[i];
  os << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      if (row[i]) os << format_double(*row[i]);
    }
    os << '\n';
  }
}

void CsvTable::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write(out);
}

}  // namespace eigenbound::cli

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace eigenbound::cli {

/// A CSV table with '#' metadata lines. Missing cells stay empty.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns);

  void add_meta(const std::string& key, const std::string& value);
  void add_row(const std::vector<std::optional<double>>& values);

  [[nodiscard]] const std::vector<std::string>& columns() const { return columns_; }
  [[nodiscard]] std::size_t rows() const { return rows_.size(); }

  void write(std::ostream& os) const;
  void write_file(const std::string& path) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::pair<std::string, std::string>> meta_;
  std::vector<std::vector<std::optional<double>>> rows_;
};

/// %.17g, which round-trips every double.
std::string format_double(double v);

}  // namespace eigenbound::cli

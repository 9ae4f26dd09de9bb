#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "eigenbound/cli/csv.hpp"
#include "eigenbound/cli/curves.hpp"
#include "eigenbound/cli/figures.hpp"
#include "eigenbound/cli/report.hpp"
#include "eigenbound/cli/sweep.hpp"
#include "eigenbound/cli/verify.hpp"
#include "eigenbound/errors.hpp"

using namespace eigenbound;
using namespace eigenbound::cli;

namespace {

struct Parsed {
  std::vector<std::string> meta;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> cells;
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Parsed parse(const std::string& text) {
  Parsed p;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) p.meta.push_back(line.substr(2));
    else if (p.header.empty()) p.header = split(line);
    else p.cells.push_back(split(line));
  }
  return p;
}

Parsed render(const CsvTable& t) {
  std::ostringstream os;
  t.write(os);
  return parse(os.str());
}

std::size_t column(const Parsed& p, const std::string& name) {
  for (std::size_t i = 0; i < p.header.size(); ++i)
    if (p.header[i] == name) return i;
  ADD_FAILURE() << "missing column " << name;
  return 0;
}

}  // namespace

TEST(Csv, RoundTripsDoublesAndLeavesGapsEmpty) {
  CsvTable t({"a", "b"});
  t.add_meta("scale", "lambda-bar");
  t.add_meta("command", "eigenbound test");
  t.add_row({0.1, std::nullopt});
  t.add_row({1.0 / 3.0, -2.5e-300});
  EXPECT_THROW(t.add_row({1.0}), std::invalid_argument);
  const Parsed p = render(t);
  ASSERT_EQ(p.meta.size(), 2u);
  EXPECT_EQ(p.meta[0], "command: eigenbound test");
  EXPECT_EQ(p.header, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(p.cells[0][1], "");
  EXPECT_EQ(std::stod(p.cells[0][0]), 0.1);
  EXPECT_EQ(std::stod(p.cells[1][0]), 1.0 / 3.0);
  EXPECT_EQ(std::stod(p.cells[1][1]), -2.5e-300);
}

TEST(Curves, KeysAndScale) {
  EXPECT_TRUE(is_curve_key("combined"));
  EXPECT_TRUE(is_curve_key("quadratic"));
  EXPECT_FALSE(is_curve_key("nope"));
  EXPECT_THROW(evaluate_curves(2, Alpha{}, {"nope"}), std::invalid_argument);
  const auto v = evaluate_curves(3, Alpha{}, {"inv_delta1_prime", "inv_delta1_star", "oracle", "bbg"});
  EXPECT_NEAR(*v[0], 8.0 / 3.0, 1e-6);
  EXPECT_NEAR(*v[1], 4.0 / std::cbrt(5.0), 1e-6);
  EXPECT_NEAR(*v[2], kPi * kPi / 4.0, 1e-9);
  EXPECT_FALSE(v[3].has_value());  // needs K > 0
}

TEST(Curves, Linspace) {
  const auto x = linspace(-1.0, 1.0, 5);
  ASSERT_EQ(x.size(), 5u);
  EXPECT_EQ(x.front(), -1.0);
  EXPECT_EQ(x.back(), 1.0);
  EXPECT_DOUBLE_EQ(x[2], 0.0);
  EXPECT_EQ(linspace(3.0, 4.0, 1), std::vector<double>{3.0});
}

TEST(Report, UnitSphere) {
  ReportOptions o;
  o.oracle = true;
  const BoundReport r = build_report({2, kPi, 1.0}, o);
  EXPECT_NEAR(r.best_value, 2.0, 1e-9);
  ASSERT_TRUE(r.oracle.has_value());
  EXPECT_NEAR(r.oracle->lambda1_lower, 2.0, 1e-8);
  EXPECT_EQ(r.oracle->sandwich_violations, 0u);
  EXPECT_TRUE(r.oracle->bracket_consistent);
  EXPECT_EQ(r.rows.size(), 13u);
}

TEST(Report, RowsOutsideTheirRangeAreMarked) {
  const BoundReport r = build_report({5, 1.0, -4.0});
  std::size_t valid = 0;
  for (const auto& row : r.rows) {
    if (row.valid) {
      ++valid;
      EXPECT_LE(row.value, r.best_value + 1e-12) << row.key;
    } else {
      EXPECT_TRUE(std::isnan(row.value)) << row.key;
    }
  }
  EXPECT_GE(valid, 6u);
  EXPECT_THROW(build_report({2, 1.0, 1e3}), MyersViolation);
}

TEST(Report, CsvIsDeterministic) {
  const BoundReport r = build_report({4, 2.0, -1.0});
  std::ostringstream a, b;
  render_csv(r, a, "eigenbound bound");
  render_csv(build_report({4, 2.0, -1.0}), b, "eigenbound bound");
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("corrected_shi_zhang"), std::string::npos);
}

TEST(Sweep, ShapeAndValidation) {
  SweepConfig s;
  s.dimensions = {2, 5};
  s.count = 100;
  s.estimates = {"combined", "quadratic", "oracle"};
  const auto tables = sweep_tables(s);
  ASSERT_EQ(tables.size(), 2u);
  for (const auto& t : tables) {
    EXPECT_EQ(t.rows(), 100u);
    EXPECT_EQ(t.columns().size(), 4u);
  }
  const Parsed p = render(tables[1]);
  const std::size_t comb = column(p, "combined"), orc = column(p, "oracle");
  for (const auto& row : p.cells) EXPECT_LE(std::stod(row[comb]), std::stod(row[orc]) * (1 + 1e-6));

  SweepConfig bad = s;
  bad.x_max = 2.0;
  EXPECT_THROW(validate(bad), std::invalid_argument);
  bad = s;
  bad.estimates = {"eq99"};
  EXPECT_THROW(validate(bad), std::invalid_argument);
  bad = s;
  bad.count = 0;
  EXPECT_THROW(validate(bad), std::invalid_argument);
}

TEST(Sweep, WritesOneFilePerDimension) {
  const auto dir = std::filesystem::temp_directory_path() / "eigenbound_sweep_test";
  std::filesystem::create_directories(dir);
  SweepConfig s;
  s.dimensions = {2, 3};
  s.count = 5;
  s.output = (dir / "out").string();
  const auto paths = run_sweep(s);
  ASSERT_EQ(paths.size(), 2u);
  for (const auto& path : paths) EXPECT_TRUE(std::filesystem::exists(path)) << path;
  EXPECT_NE(paths[1].find("_d3.csv"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Figures, MAlphaSigns) {
  FigureOptions o;
  o.grid = 41;
  const Parsed p = render(figure_table(6, o));
  const std::size_t m = column(p, "m_alpha");
  for (const auto& row : p.cells) {
    const double x = std::stod(row[0]);
    const double v = std::stod(row[m]);
    if (x < -1e-12) EXPECT_LT(v, 1.0) << x;
    if (x > 1e-12) EXPECT_GT(v, 1.0) << x;
  }
}

TEST(Figures, GapIsNonNegative) {
  FigureOptions o;
  o.grid = 20;
  const Parsed p = render(figure_table(4, o));
  const std::size_t g = column(p, "gap");
  ASSERT_EQ(p.cells.size(), 20u);
  for (const auto& row : p.cells) EXPECT_GE(std::stod(row[g]), -1e-8) << row[0];
}

TEST(Figures, NegativeCurvatureDeltaCurvesMergeForLargeAlpha) {
  FigureOptions o;
  o.grid = 13;
  const Parsed p = render(figure_table(8, o));
  const std::size_t a = column(p, "inv_delta1_star"), b = column(p, "inv_delta1_prime");
  double previous = 1.0;
  for (const auto& row : p.cells) {
    const double u = std::stod(row[a]), v = std::stod(row[b]);
    EXPECT_LE(u, v) << row[0];
    const double rel = (v - u) / v;
    EXPECT_LT(rel, previous) << row[0];
    previous = rel;
  }
  EXPECT_LT(previous, 0.01);
  EXPECT_THROW(figure_table(10, o), std::invalid_argument);
}

TEST(Verify, FastSuitePasses) {
  const VerifyReport r = run_verify(Suite::fast);
  EXPECT_TRUE(r.passed());
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

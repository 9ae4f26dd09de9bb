#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eigenbound/cli/curves.hpp"
#include "eigenbound/cli/figures.hpp"
#include "eigenbound/cli/report.hpp"
#include "eigenbound/cli/sweep.hpp"
#include "eigenbound/cli/verify.hpp"
#include "eigenbound/errors.hpp"
#include "eigenbound/version.hpp"

namespace {

std::string join_args(int argc, char** argv) {
  std::ostringstream os;
  for (int i = 0; i < argc; ++i) os << (i ? " " : "") << argv[i];
  return os.str();
}

std::vector<std::string> split_keys(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace eigenbound;
  CLI::App app{"Lower bounds for the first Neumann eigenvalue under Ricci curvature and diameter bounds"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  const std::string command_line = join_args(argc, argv);

  int d = 2;
  double D = 1.0;
  double K = 0.0;
  std::optional<double> alpha;
  bool oracle = false;
  double tol = 1e-12;
  std::size_t grid = 200;
  std::size_t resolution = 2001;
  std::string out;
  std::string format = "table";

  auto* bound = app.add_subcommand("bound", "Report every lower bound for one (d, D, K)");
  bound->add_option("-d", d, "dimension")->check(CLI::PositiveNumber);
  bound->add_option("-D", D, "diameter")->check(CLI::PositiveNumber);
  bound->add_option("-K", K, "Ricci lower bound");
  bound->add_option("--alpha", alpha,
                    "signed alpha instead of K: |alpha| = |x|, K < 0 iff x < 0 (K is derived from d and D)");
  bound->add_flag("--oracle", oracle, "also solve for bar_lambda by shooting and check the sandwich");
  bound->add_option("--tol", tol, "oracle tolerance on lambda")->check(CLI::Range(1e-12, 1e-2));
  bound->add_option("--grid", resolution, "sup/inf search resolution for the delta quantities")->check(CLI::Range(11, 200001));
  bound->add_option("--format", format, "table or csv")->check(CLI::IsMember({"table", "csv"}));
  bound->add_option("--out", out, "write to this file instead of stdout");

  int figure_id = 0;
  auto* figure = app.add_subcommand("figure", "Emit the data behind one of the figures as CSV");
  figure->add_option("id", figure_id, "figure number 1..9")->required()->check(CLI::Range(1, 9));
  figure->add_option("--grid", grid, "points on the x axis")->check(CLI::PositiveNumber);
  figure->add_option("--out", out, "output file (default figure<id>.csv)");

  cli::SweepConfig config;
  std::string dims = "2";
  std::string estimates = "combined";
  auto* sweep = app.add_subcommand("sweep", "Tabulate estimates over the signed alpha axis");
  sweep->add_option("--dims", dims, "comma-separated dimensions");
  sweep->add_option("--xmin", config.x_min, "left end of the x axis");
  sweep->add_option("--xmax", config.x_max, "right end of the x axis (at most pi/2)");
  sweep->add_option("--grid", grid, "points on the x axis")->check(CLI::PositiveNumber);
  sweep->add_option("--estimates", estimates, "comma-separated curve keys (see --list)");
  sweep->add_option("--out", out, "output prefix; files are <out>_d<d>.csv");
  bool list_keys = false;
  sweep->add_flag("--list", list_keys, "print the available curve keys and exit");

  std::string suite = "fast";
  auto* verify = app.add_subcommand("verify", "Run the self-check suite");
  verify->add_option("suite", suite, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--out", out, "JSON results file (default verify_results.json)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bound) {
      GeometryTriple g{d, D, K};
      if (alpha) g = triple_from_alpha(d, Alpha::from_signed(*alpha), D);
      const auto report = cli::build_report(g, {oracle, tol, resolution});
      std::ofstream file;
      if (!out.empty()) {
        file.open(out);
        if (!file) throw std::runtime_error("cannot open " + out);
      }
      std::ostream& os = out.empty() ? std::cout : file;
      if (format == "csv") {
        cli::render_csv(report, os, command_line);
      } else {
        cli::render_table(report, os);
      }
      if (report.oracle && (report.oracle->sandwich_violations > 0 || !report.oracle->bracket_consistent)) return 2;
      return 0;
    }
    if (*figure) {
      const auto table = cli::figure_table(figure_id, {grid, 2001, command_line});
      const std::string path = out.empty() ? "figure" + std::to_string(figure_id) + ".csv" : out;
      table.write_file(path);
      std::cout << "wrote " << path << " (" << table.rows() << " rows)\n";
      return 0;
    }
    if (*sweep) {
      if (list_keys) {
        for (const auto& k : cli::curve_keys()) std::cout << k << '\n';
        return 0;
      }
      config.dimensions.clear();
      for (const auto& s : split_keys(dims)) config.dimensions.push_back(std::stoi(s));
      config.estimates = split_keys(estimates);
      config.count = grid;
      config.output = out.empty() ? "sweep" : out;
      config.command_line = command_line;
      for (const auto& p : cli::run_sweep(config)) std::cout << "wrote " << p << '\n';
      return 0;
    }
    if (*verify) {
      const auto report = cli::run_verify(suite == "full" ? cli::Suite::full : cli::Suite::fast,
                                          [](const cli::CheckRecord& c) {
                                            std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << " ("
                                                      << c.seconds << " s)\n";
                                          });
      cli::render_verify(report, std::cout);
      const std::string path = out.empty() ? "verify_results.json" : out;
      std::ofstream(path) << cli::verify_json(report) << '\n';
      return report.passed() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

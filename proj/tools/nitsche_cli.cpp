// nitsche: convergence studies and trace-constant estimates from a JSON config.
//
//   nitsche study <config.json> [--out DIR] [--threads N]
//   nitsche trace <config.json> [--out DIR] [--seed S]
//
// Exit codes: 0 success, 2 configuration error, 3 a study row failed.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "nitsche/config.hpp"
#include "nitsche/report.hpp"
#include "nitsche/study.hpp"

namespace fs = std::filesystem;
using namespace nitsche;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitFailedRow = 3;

int resolve_threads(int cli_threads) {
  if (cli_threads > 0) return cli_threads;
  if (const char* env = std::getenv("NITSCHE_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid NITSCHE_THREADS='" << env << "'\n";
  }
  return 1;
}

fs::path output_dir(const RunConfig& rc, const std::string& cli_out) {
  fs::path dir = cli_out.empty() ? fs::path(rc.output_dir) : fs::path(cli_out);
  fs::create_directories(dir);
  return dir;
}

int cmd_study(const std::string& path, const std::string& out, int threads) {
  RunConfig rc;
  std::vector<ConvergenceReport> reports;
  try {
    rc = load_config(path);
    reports = run_convergence(rc.study, resolve_threads(threads));
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  const fs::path dir = output_dir(rc, out);
  int code = kExitOk;
  for (const auto& report : reports) {
    const fs::path file = dir / (rc.name + "_" + to_string(report.variant) + ".csv");
    std::ofstream csv(file);
    write_study_csv(csv, report);
    std::cout << file.string() << '\n';
    for (const auto& row : report.rows) {
      if (row.status != "ok") {
        std::cerr << to_string(report.variant) << " " << row.nx << "x" << row.ny << ": " << row.status << ": "
                  << row.message << '\n';
        code = kExitFailedRow;
      }
    }
  }
  return code;
}

int cmd_trace(const std::string& path, const std::string& out, unsigned seed) {
  RunConfig rc;
  std::vector<TraceRow> rows;
  try {
    rc = load_config(path);
    rows = trace_table(rc.study, seed);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  const fs::path file = output_dir(rc, out) / (rc.name + "_trace.csv");
  std::ofstream csv(file);
  write_trace_csv(csv, rows);
  std::cout << file.string() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nitsche weak boundary conditions: convergence studies and trace constants"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out;
  int threads = 0;
  unsigned seed = 12345;
  app.add_option("--out", out, "output directory (overrides the config)");
  app.add_option("--threads", threads, "worker threads for study rows (fallback: NITSCHE_THREADS)");
  app.add_option("--seed", seed, "seed for random-vector diagnostics");

  std::string study_cfg, trace_cfg;
  auto* study = app.add_subcommand("study", "run a convergence study");
  study->add_option("config", study_cfg, "JSON config")->required();
  auto* trace = app.add_subcommand("trace", "estimate trace constants");
  trace->add_option("config", trace_cfg, "JSON config")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }
  try {
    if (*study) return cmd_study(study_cfg, out, threads);
    return cmd_trace(trace_cfg, out, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

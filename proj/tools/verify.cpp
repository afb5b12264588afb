// Verification harness: runs the registered identity checks of one suite (or
// all of them) with configurable seed, sample count and tolerances, prints a
// per-check summary and optionally writes a machine-readable report.
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage error,
// 3 I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <string>

#include "torsionlab/report.hpp"

namespace {

void print_summary(const torsionlab::report::VerificationReport& report) {
  for (const auto& c : report.checks) {
    std::printf("[%s] %-40s residual %.3e (%s %.3e, %ld points)\n", c.pass ? "PASS" : "FAIL",
                c.check_id.c_str(), c.max_residual,
                c.comparison == "at_most" ? "tol" : "min", c.tolerance, c.points_tested);
  }
  std::printf("%s: %zu checks, %s\n", report.suite.c_str(), report.checks.size(),
              report.pass ? "all passed" : "FAILURES present");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace torsionlab::report;

  CLI::App app{"torsionlab verification harness"};
  app.name("verify");

  SuiteConfig cfg;
  app.add_option("suite", cfg.suite, "suite to run: liegroup | s7 | g2 | vectorial | all")
      ->required();
  app.add_option("--samples", cfg.samples, "sample count driving the per-check point budgets")
      ->envname("VERIFY_SAMPLES")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "base seed; per-check streams derive from it")
      ->envname("VERIFY_SEED")
      ->capture_default_str();
  app.add_option("--tol-exact", cfg.tol_exact, "tolerance for algebraically exact identities")
      ->envname("VERIFY_TOL_EXACT")
      ->capture_default_str();
  app.add_option("--tol-fd", cfg.tol_fd, "tolerance for finite-difference comparisons")
      ->envname("VERIFY_TOL_FD")
      ->capture_default_str();
  app.add_option("--out", cfg.output_path, "write the report to this path")
      ->envname("VERIFY_OUT");
  app.add_option("--format", cfg.format, "report format: json | csv")
      ->envname("VERIFY_FORMAT")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse error
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    validate_config(cfg);
    const VerificationReport report = run_suite(cfg);
    print_summary(report);
    if (!cfg.output_path.empty()) write_report(report, cfg.output_path, cfg.format);
    return exit_code(report);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCheckFailure;
  }
}

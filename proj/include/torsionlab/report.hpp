#pragma once

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "torsionlab/checks.hpp"
#include "torsionlab/rng.hpp"
#include "torsionlab/version.hpp"

namespace torsionlab::report {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exit-code contract: 0 all checks pass, 1 check failure, 2 usage, 3 I/O.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

struct CheckResult {
  std::string check_id;
  std::string anchor;
  long points_tested = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string comparison;  // "at_most" | "at_least"
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::string version;
  SuiteConfig config;
  std::vector<CheckResult> checks;
  bool pass = false;
};

inline void validate_config(const SuiteConfig& cfg) {
  static const char* kSuites[] = {"liegroup", "s7", "g2", "vectorial", "all"};
  if (std::find_if(std::begin(kSuites), std::end(kSuites),
                   [&](const char* s) { return cfg.suite == s; }) == std::end(kSuites))
    throw UsageError("unknown suite '" + cfg.suite + "'");
  if (cfg.samples < 1) throw UsageError("samples must be >= 1");
  if (!(cfg.tol_exact > 0.0) || !(cfg.tol_fd > 0.0)) throw UsageError("tolerances must be positive");
  if (cfg.format != "json" && cfg.format != "csv")
    throw UsageError("format must be json or csv");
}

/// Run all registered checks of the suite. Deterministic: each check draws
/// from its own stream seeded by the base seed and the check id, and results
/// are reduced in registry order (sorted by id).
inline VerificationReport run_suite(const SuiteConfig& cfg) {
  validate_config(cfg);
  std::vector<Check> checks = suite_checks(cfg.suite);
  std::sort(checks.begin(), checks.end(),
            [](const Check& a, const Check& b) { return a.id < b.id; });
  VerificationReport report;
  report.suite = cfg.suite;
  report.version = kVersion;
  report.config = cfg;
  report.pass = true;
  for (const Check& check : checks) {
    Rng rng(cfg.seed ^ fnv1a(check.id));
    const auto [points, residual] = check.run(cfg, rng);
    CheckResult res;
    res.check_id = check.id;
    res.anchor = check.anchor;
    res.points_tested = points;
    res.max_residual = residual;
    res.tolerance = check.tolerance(cfg);
    res.comparison = check.comparison == Comparison::kAtMost ? "at_most" : "at_least";
    res.pass = check.comparison == Comparison::kAtMost ? residual <= res.tolerance
                                                       : residual >= res.tolerance;
    report.pass = report.pass && res.pass;
    report.checks.push_back(std::move(res));
  }
  return report;
}

inline nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks)
    checks.push_back({{"check_id", c.check_id},
                      {"anchor", c.anchor},
                      {"points_tested", c.points_tested},
                      {"max_residual", c.max_residual},
                      {"tolerance", c.tolerance},
                      {"comparison", c.comparison},
                      {"pass", c.pass}});
  return nlohmann::ordered_json{{"version", report.version},
                                {"suite", report.suite},
                                {"config",
                                 {{"samples", report.config.samples},
                                  {"seed", report.config.seed},
                                  {"tol_exact", report.config.tol_exact},
                                  {"tol_fd", report.config.tol_fd}}},
                                {"checks", checks},
                                {"pass", report.pass}};
}

inline std::string to_json_string(const VerificationReport& report) {
  return to_json(report).dump(2) + "\n";
}

/// One row per check; stable column order.
inline std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "check_id,anchor,points_tested,max_residual,tolerance,comparison,pass\n";
  for (const CheckResult& c : report.checks) {
    std::string anchor = c.anchor;
    std::replace(anchor.begin(), anchor.end(), ',', ';');
    out << c.check_id << ',' << '"' << anchor << '"' << ',' << c.points_tested << ','
        << nlohmann::ordered_json(c.max_residual).dump() << ','
        << nlohmann::ordered_json(c.tolerance).dump() << ',' << c.comparison << ','
        << (c.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

inline void write_report(const VerificationReport& report, const std::string& path,
                         const std::string& format) {
  const std::string body = format == "csv" ? to_csv(report) : to_json_string(report);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << body;
  if (!out) throw IoError("failed writing '" + path + "'");
}

inline int exit_code(const VerificationReport& report) {
  return report.pass ? kExitPass : kExitCheckFailure;
}

}  // namespace torsionlab::report

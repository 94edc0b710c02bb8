#pragma once

#include "torustam/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace torustam {

/// Malformed configuration (exit code 64).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitInconclusive = 2, kExitConfig = 64 };

struct RunConfig {
  std::string command = "all";  ///< euler | lifting | globalinv | density | sha | tnc | all
  std::vector<std::string> tori;
  std::int64_t pmax = 97;
  int kmax = 3;
  double tol = 1e-6;
  std::uint64_t budget = 0;  ///< 0: environment or built-in default
  int jobs = 0;              ///< 0: OpenMP default
  std::string out;           ///< empty: stdout
  bool timings = false;

  /// Throws ConfigError naming the offending field.
  void validate() const;
  std::uint64_t effective_budget() const;
  Json echo() const;
};

const std::vector<std::string>& known_commands();

/// Merges a JSON config document into `cfg`; unknown keys are errors.
/// Parse errors report the line and column.
void apply_config_text(RunConfig& cfg, const std::string& text, const std::string& origin = "config");
void apply_config_file(RunConfig& cfg, const std::string& path);

struct RunResult {
  int exit_code = kExitPass;
  std::vector<VerificationReport> reports;
  Json document;
  std::string error;  ///< set for exit code 64
};

/// Runs the verifications without touching the filesystem.
RunResult execute(const RunConfig& cfg);

/// Writes `text` to `path` through a temporary file and a rename.
void write_atomically(const std::string& path, const std::string& text);

/// execute() plus output: JSON to cfg.out (or `out`), one summary line per
/// report to `log`. Returns the exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& log);

}  // namespace torustam

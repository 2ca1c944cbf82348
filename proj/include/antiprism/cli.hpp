#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "antiprism/types.hpp"

namespace antiprism::cli {

inline constexpr int kSchemaVersion = 1;

enum class Command { Exists, Params, Angles, Volume, Euclidean, Sweep, Verify };
enum class Format { Json, Csv, Text };

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNotRealizable = 2,
  kExitConvergence = 3,
  kExitInternal = 4,
};

struct SweepRange {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  double at(int i) const { return steps == 1 ? min : min + (max - min) * double(i) / double(steps - 1); }
};

struct RunConfig {
  Command command = Command::Volume;
  int n = 3;
  double a = 1.0;
  double c = 1.0;
  double rel_tol = 1e-10;
  long max_evaluations = 1'000'000;
  Format format = Format::Json;
  bool allow_degenerate = false;
  bool degrees = false;
  bool quick = false;
  int jobs = 1;
  SweepRange a_range{0.5, 2.0, 4};
  SweepRange c_range{0.5, 2.5, 5};
};

/// One evaluated point. Optional fields are emitted as null (JSON) or empty
/// (CSV) when the command does not compute them or the point is not
/// realizable.
struct Report {
  std::string command;
  std::string geometry = "hyperbolic";
  int index = 0;
  int n = 0;
  double a = 0.0;
  double c = 0.0;
  double rel_tol = 0.0;
  bool exists = false;
  bool on_boundary = false;
  double margin = 0.0;
  double c0 = 0.0;
  std::optional<double> r, h, A, C, excess, volume, abs_error_estimate;
  std::optional<long> evaluations;
  std::optional<std::string> error;
};

std::string to_string(Command command);

/// Checks ranges and tolerances; throws antiprism::Error(InvalidArgument).
void validate(const RunConfig& config);

/// Evaluates one point for a single-instance command (all but sweep/verify).
/// Never throws for NotRealizable or ConvergenceFailure; those are recorded
/// in the report.
Report evaluate(const RunConfig& config);

/// Evaluates the sweep grid (a-major, c-minor), using up to config.jobs threads.
std::vector<Report> sweep(const RunConfig& config);

std::string format_json(const Report& report);
std::string format_sweep_json(const std::vector<Report>& rows);
std::string csv_header();
std::string format_csv_row(const Report& report);
std::string format_text(const Report& report, bool degrees);

/// Exit status implied by a report.
int exit_code(const Report& report);

/// Runs a parsed configuration, writing the report to `out` and
/// diagnostics to `err`; returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  bool quick = false;
  /// Closed-form angle routine under test; replaceable to check that the
  /// suite catches a broken implementation.
  std::function<DihedralAngles<double>(const AntiprismSpec<double>&)> closed_form_angles;
};

struct SuiteResult {
  std::string name;
  int passed = 0;
  int total = 0;
  std::string first_failure;

  bool ok() const { return passed == total; }
};

std::vector<SuiteResult> verify(const VerifyOptions& options);

/// Prints per-suite pass/fail counts; returns 0 iff every suite passed.
int run_verify(const VerifyOptions& options, std::ostream& out);

/// Full command line entry point (parsing included).
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace antiprism::cli

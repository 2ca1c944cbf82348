#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "antiprism/antiprism.hpp"
#include "antiprism/cli.hpp"

namespace antiprism::cli {
namespace {

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string json_number(std::optional<double> x) { return x ? number(*x) : "null"; }

std::string csv_number(std::optional<double> x) { return x ? number(*x) : ""; }

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

const char* boolean(bool b) { return b ? "true" : "false"; }

void fill_angles(Report& rep, const DihedralAngles<double>& angles) {
  rep.A = angles.A;
  rep.C = angles.C;
  rep.excess = angles.excess();
}

void evaluate_euclidean(const RunConfig& config, const AntiprismSpec<double>& spec, Report& rep) {
  rep.geometry = "euclidean";
  const Boundary boundary = config.allow_degenerate ? Boundary::Allow : Boundary::Reject;
  const ExistenceReport<double> ex = euc_exists(spec);
  rep.exists = ex.exists;
  rep.on_boundary = ex.on_boundary;
  rep.margin = ex.margin;
  rep.c0 = ex.c0;
  if (!ex.exists && !(config.allow_degenerate && ex.on_boundary)) return;

  const EmbeddingParams<double> p = euc_params(spec, boundary);
  rep.r = p.r;
  rep.h = p.h;
  if (ex.exists) fill_angles(rep, euc_angles(spec));
  rep.volume = euc_volume(spec, boundary);
}

void evaluate_hyperbolic(const RunConfig& config, const AntiprismSpec<double>& spec, Command command,
                         Report& rep) {
  const Boundary boundary = config.allow_degenerate ? Boundary::Allow : Boundary::Reject;
  const ExistenceReport<double> ex = hyp_exists(spec);
  rep.exists = ex.exists;
  rep.on_boundary = ex.on_boundary;
  rep.margin = ex.margin;
  rep.c0 = ex.c0;
  if (command == Command::Exists) return;
  if (!ex.exists && !(config.allow_degenerate && ex.on_boundary)) return;

  const EmbeddingParams<double> p = hyp_params(spec, boundary);
  rep.r = p.r;
  rep.h = p.h;
  if (command == Command::Params) return;

  if (ex.exists) fill_angles(rep, hyp_angles(spec));
  if (command == Command::Angles) return;

  try {
    const QuadratureResult<double> q = hyp_volume(spec, config.rel_tol, config.max_evaluations, boundary);
    rep.volume = q.value;
    rep.abs_error_estimate = q.abs_error_estimate;
    rep.evaluations = q.evaluations;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ConvergenceFailure) throw;
    rep.error = std::string(to_string(e.code()));
  }
}

Report evaluate_point(const RunConfig& config, Command command, double a, double c) {
  Report rep;
  rep.command = to_string(command);
  rep.n = config.n;
  rep.a = a;
  rep.c = c;
  rep.rel_tol = config.rel_tol;
  const AntiprismSpec<double> spec{config.n, a, c};
  if (command == Command::Euclidean) {
    evaluate_euclidean(config, spec, rep);
  } else {
    evaluate_hyperbolic(config, spec, command == Command::Sweep ? Command::Volume : command, rep);
  }
  return rep;
}

void check(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

}  // namespace

std::string to_string(Command command) {
  switch (command) {
    case Command::Exists: return "exists";
    case Command::Params: return "params";
    case Command::Angles: return "angles";
    case Command::Volume: return "volume";
    case Command::Euclidean: return "euclidean";
    case Command::Sweep: return "sweep";
    case Command::Verify: return "verify";
  }
  return "unknown";
}

void validate(const RunConfig& config) {
  check(config.n >= 2, "--n must be at least 2");
  check(config.rel_tol >= kMinRelTol && config.rel_tol <= kMaxRelTol, "--rel-tol must lie in [1e-13, 1e-3]");
  check(config.max_evaluations >= 15, "--max-evals must be at least 15");
  check(config.jobs >= 1, "--jobs must be at least 1");
  if (config.command == Command::Sweep) {
    for (const SweepRange* range : {&config.a_range, &config.c_range}) {
      check(range->steps >= 1, "sweep steps must be at least 1");
      check(std::isfinite(range->min) && std::isfinite(range->max), "sweep ranges must be finite");
      check(range->min > 0.0, "sweep ranges must be positive");
      check(range->min <= range->max, "sweep range minimum exceeds maximum");
      check(range->max <= kMaxHyperbolicLength, "sweep ranges are limited to 25");
    }
  }
}

Report evaluate(const RunConfig& config) {
  return evaluate_point(config, config.command, config.a, config.c);
}

std::vector<Report> sweep(const RunConfig& config) {
  const int a_steps = config.a_range.steps;
  const int c_steps = config.c_range.steps;
  const std::size_t count = std::size_t(a_steps) * std::size_t(c_steps);
  std::vector<Report> rows(count);
  std::atomic<std::size_t> next{0};

  auto work = [&]() {
    for (std::size_t i = next++; i < count; i = next++) {
      const double a = config.a_range.at(int(i) / c_steps);
      const double c = config.c_range.at(int(i) % c_steps);
      try {
        rows[i] = evaluate_point(config, Command::Sweep, a, c);
      } catch (const Error& e) {
        rows[i] = Report{};
        rows[i].command = to_string(Command::Sweep);
        rows[i].n = config.n;
        rows[i].a = a;
        rows[i].c = c;
        rows[i].rel_tol = config.rel_tol;
        rows[i].error = std::string(to_string(e.code()));
      }
      rows[i].index = int(i);
    }
  };

  const int threads = std::min<int>(config.jobs, int(count));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return rows;
}

namespace {

std::string json_fields(const Report& rep) {
  std::ostringstream os;
  os << "\"schema_version\":" << kSchemaVersion << ",\"command\":" << quoted(rep.command)
     << ",\"geometry\":" << quoted(rep.geometry) << ",\"index\":" << rep.index << ",\"inputs\":{\"n\":" << rep.n
     << ",\"a\":" << number(rep.a) << ",\"c\":" << number(rep.c) << ",\"rel_tol\":" << number(rep.rel_tol)
     << "},\"exists\":" << boolean(rep.exists) << ",\"on_boundary\":" << boolean(rep.on_boundary)
     << ",\"margin\":" << number(rep.margin) << ",\"c0\":" << number(rep.c0) << ",\"r\":" << json_number(rep.r)
     << ",\"h\":" << json_number(rep.h) << ",\"A\":" << json_number(rep.A) << ",\"C\":" << json_number(rep.C)
     << ",\"angle_excess\":" << json_number(rep.excess) << ",\"volume\":" << json_number(rep.volume)
     << ",\"abs_error_estimate\":" << json_number(rep.abs_error_estimate) << ",\"evaluations\":"
     << (rep.evaluations ? std::to_string(*rep.evaluations) : "null")
     << ",\"error\":" << (rep.error ? quoted(*rep.error) : "null");
  return os.str();
}

}  // namespace

std::string format_json(const Report& rep) { return "{" + json_fields(rep) + "}\n"; }

std::string format_sweep_json(const std::vector<Report>& rows) {
  std::string out = "{\"schema_version\":" + std::to_string(kSchemaVersion) + ",\"command\":\"sweep\",\"rows\":[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) out += ",";
    out += "\n{" + json_fields(rows[i]) + "}";
  }
  return out + "\n]}\n";
}

std::string csv_header() {
  return "schema_version,command,geometry,index,n,a,c,rel_tol,realizable,on_boundary,margin,c0,r,h,A,C,"
         "angle_excess,volume,abs_error_estimate,evaluations,error\n";
}

std::string format_csv_row(const Report& rep) {
  std::ostringstream os;
  os << kSchemaVersion << ',' << rep.command << ',' << rep.geometry << ',' << rep.index << ',' << rep.n << ','
     << number(rep.a) << ',' << number(rep.c) << ',' << number(rep.rel_tol) << ',' << boolean(rep.exists) << ','
     << boolean(rep.on_boundary) << ',' << number(rep.margin) << ',' << number(rep.c0) << ',' << csv_number(rep.r)
     << ',' << csv_number(rep.h) << ',' << csv_number(rep.A) << ',' << csv_number(rep.C) << ','
     << csv_number(rep.excess) << ',' << csv_number(rep.volume) << ',' << csv_number(rep.abs_error_estimate) << ','
     << (rep.evaluations ? std::to_string(*rep.evaluations) : "") << ',' << rep.error.value_or("") << '\n';
  return os.str();
}

std::string format_text(const Report& rep, bool degrees) {
  const double unit = degrees ? 180.0 / std::numbers::pi : 1.0;
  const char* suffix = degrees ? " deg" : " rad";
  std::ostringstream os;
  os << rep.geometry << " antiprism n=" << rep.n << " a=" << number(rep.a) << " c=" << number(rep.c) << '\n';
  os << "  exists: " << boolean(rep.exists) << (rep.on_boundary ? " (flattening boundary)" : "") << '\n';
  os << "  margin: " << number(rep.margin) << '\n';
  os << "  c0: " << number(rep.c0) << '\n';
  if (rep.r) os << "  r: " << number(*rep.r) << '\n';
  if (rep.h) os << "  h: " << number(*rep.h) << '\n';
  if (rep.A) os << "  A: " << number(*rep.A * unit) << suffix << '\n';
  if (rep.C) os << "  C: " << number(*rep.C * unit) << suffix << '\n';
  if (rep.excess) os << "  2A+2C-2pi: " << number(*rep.excess * unit) << suffix << '\n';
  if (rep.volume) os << "  volume: " << number(*rep.volume) << '\n';
  if (rep.abs_error_estimate) os << "  abs_error_estimate: " << number(*rep.abs_error_estimate) << '\n';
  if (rep.evaluations) os << "  evaluations: " << *rep.evaluations << '\n';
  if (rep.error) os << "  error: " << *rep.error << '\n';
  return os.str();
}

int exit_code(const Report& rep) {
  if (rep.error) {
    return *rep.error == to_string(ErrorCode::ConvergenceFailure) ? kExitConvergence : kExitInternal;
  }
  if (!rep.exists && (rep.command == to_string(Command::Exists) || !rep.h)) return kExitNotRealizable;
  return kExitOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    if (config.command == Command::Verify) {
      VerifyOptions options;
      options.quick = config.quick;
      return run_verify(options, out);
    }
    if (config.command == Command::Sweep) {
      const std::vector<Report> rows = sweep(config);
      switch (config.format) {
        case Format::Json: out << format_sweep_json(rows); break;
        case Format::Csv:
          out << csv_header();
          for (const Report& row : rows) out << format_csv_row(row);
          break;
        case Format::Text:
          for (const Report& row : rows) out << format_text(row, config.degrees);
          break;
      }
      int status = kExitOk;
      for (const Report& row : rows) {
        if (row.error) status = std::max(status, exit_code(row));
      }
      return status;
    }

    const Report rep = evaluate(config);
    switch (config.format) {
      case Format::Json: out << format_json(rep); break;
      case Format::Csv: out << csv_header() << format_csv_row(rep); break;
      case Format::Text: out << format_text(rep, config.degrees); break;
    }
    return exit_code(rep);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::InvalidArgument:
      case ErrorCode::OverflowGuard: return kExitUsage;
      case ErrorCode::ConvergenceFailure: return kExitConvergence;
      default: return kExitInternal;
    }
  }
}

}  // namespace antiprism::cli

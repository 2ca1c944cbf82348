#include <cstdlib>
#include <map>
#include <ostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "antiprism/cli.hpp"
#include "antiprism/volume.hpp"

namespace antiprism::cli {
namespace {

int default_jobs() {
  if (const char* env = std::getenv("ANTIPRISM_JOBS")) {
    try {
      const int jobs = std::stoi(env);
      if (jobs >= 1) return jobs;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

void add_instance_options(CLI::App& sub, RunConfig& config) {
  sub.add_option("--n", config.n, "Number of vertices of the top polygon (n >= 2)")->capture_default_str();
  sub.add_option("--a", config.a, "Polygon edge length a")->capture_default_str();
  sub.add_option("--c", config.c, "Lateral edge length c")->capture_default_str();
}

void add_output_options(CLI::App& sub, RunConfig& config) {
  static const std::map<std::string, Format> formats{
      {"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};
  sub.add_option("--format", config.format, "Output format: json, csv or text")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub.add_flag("--degrees", config.degrees, "Print angles in degrees (text format only)");
  sub.add_flag("--allow-degenerate", config.allow_degenerate,
               "Report a flattened (h = 0, volume 0) solid on the existence boundary");
}

void add_volume_options(CLI::App& sub, RunConfig& config) {
  sub.add_option("--rel-tol", config.rel_tol, "Relative tolerance of the volume quadrature")->capture_default_str();
  sub.add_option("--max-evals", config.max_evaluations, "Integrand evaluation budget")->capture_default_str();
}

}  // namespace

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.jobs = default_jobs();

  CLI::App app{"Existence, embedding, dihedral angles and volume of hyperbolic and Euclidean antiprisms"};
  app.require_subcommand(1);

  struct Entry {
    Command command;
    const char* name;
    const char* help;
  };
  const Entry entries[] = {
      {Command::Exists, "exists", "Existence test, margin and flattening threshold c0"},
      {Command::Params, "params", "Cayley-Klein embedding parameters r and h"},
      {Command::Angles, "angles", "Dihedral angles A and C"},
      {Command::Volume, "volume", "Hyperbolic volume with error estimate"},
      {Command::Euclidean, "euclidean", "Euclidean antiprism: parameters, angles and volume"},
  };
  for (const Entry& entry : entries) {
    CLI::App* sub = app.add_subcommand(entry.name, entry.help);
    add_instance_options(*sub, config);
    add_output_options(*sub, config);
    if (entry.command == Command::Volume) add_volume_options(*sub, config);
    sub->callback([&config, command = entry.command] { config.command = command; });
  }

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Grid sweep over (a, c) at fixed n");
  sweep_cmd->add_option("--n", config.n, "Number of vertices of the top polygon")->capture_default_str();
  sweep_cmd->add_option("--a-min", config.a_range.min)->capture_default_str();
  sweep_cmd->add_option("--a-max", config.a_range.max)->capture_default_str();
  sweep_cmd->add_option("--a-steps", config.a_range.steps)->capture_default_str();
  sweep_cmd->add_option("--c-min", config.c_range.min)->capture_default_str();
  sweep_cmd->add_option("--c-max", config.c_range.max)->capture_default_str();
  sweep_cmd->add_option("--c-steps", config.c_range.steps)->capture_default_str();
  sweep_cmd->add_option("--jobs", config.jobs, "Worker threads (default: $ANTIPRISM_JOBS or all cores)");
  add_output_options(*sweep_cmd, config);
  add_volume_options(*sweep_cmd, config);
  sweep_cmd->callback([&config] { config.command = Command::Sweep; });

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the cross-validation suites");
  verify_cmd->add_flag("--quick", config.quick, "Reduced grids");
  verify_cmd->callback([&config] { config.command = Command::Verify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace antiprism::cli

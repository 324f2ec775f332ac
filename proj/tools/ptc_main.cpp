#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptc/runner.hpp"
#include "ptc/scenario.hpp"

namespace {

// --out-dir beats PTC_OUT_DIR beats the built-in default.
std::string resolve_out_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("PTC_OUT_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return "ptc_out";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ptc - predefined-time controller laboratory"};
  app.require_subcommand(1);

  std::string out_dir_flag;
  bool quiet = false;
  app.add_option("--out-dir", out_dir_flag, "Output directory (default: $PTC_OUT_DIR or ptc_out)");
  app.add_flag("--quiet", quiet, "Suppress progress output");

  struct Command {
    ptc::AnalysisKind kind;
    const char* name;
    const char* help;
  };
  const std::vector<Command> commands = {
      {ptc::AnalysisKind::simulate, "simulate", "Integrate the scenario and emit trajectory CSVs"},
      {ptc::AnalysisKind::peaks, "peaks", "Locate and classify the control peak per run"},
      {ptc::AnalysisKind::bound_scan, "bound-scan", "Scan both laws at t0 against the eta/(tf-t0) bound"},
      {ptc::AnalysisKind::velocity_check, "velocity-check", "Check the |x0|/(tf-t0) velocity lower bound"},
      {ptc::AnalysisKind::singularity, "singularity", "Classify terminal behavior of state derivatives"},
      {ptc::AnalysisKind::compare, "compare", "Compare predefined-time and fixed-time peak locations"},
  };

  std::string scenario_path;
  ptc::AnalysisKind selected{};
  for (const Command& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->fallthrough();  // let --out-dir/--quiet appear after the subcommand
    sub->add_option("scenario", scenario_path, "Scenario file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->callback([&selected, kind = cmd.kind] { selected = kind; });
  }

  CLI11_PARSE(app, argc, argv);

  ptc::RunOptions options;
  options.out_dir = resolve_out_dir(out_dir_flag);
  options.quiet = quiet;

  const ptc::AnalysisKind kinds[] = {selected};
  return ptc::run_scenario_file(scenario_path, kinds, options);
}

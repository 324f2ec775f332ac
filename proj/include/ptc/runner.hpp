#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ptc/scenario.hpp"

namespace ptc {

struct RunOptions {
  std::filesystem::path out_dir = "ptc_out";
  bool quiet = false;
};

/// Executes the given analyses in order against a loaded scenario, writing
/// one CSV per trajectory and one JSON report per analysis into out_dir.
/// Outputs are byte-deterministic. Returns the files written, in order.
/// Throws ValidationError for analysis preconditions the scenario does not
/// meet and IoError when outputs cannot be written. Divergence of a run is
/// reported in the JSON, not thrown.
std::vector<std::filesystem::path> run_scenario(const Scenario& scenario,
                                                std::span<const AnalysisKind> analyses,
                                                const RunOptions& options);

/// Loads the scenario at `path` and runs it: the `analyses` override, when
/// non-empty, replaces the file's [analyses] list. Returns the CLI exit
/// status (0 ok, 2 parse error, 3 validation error, 4 io error) and prints
/// the error category to stderr on failure.
int run_scenario_file(const std::filesystem::path& path,
                      std::span<const AnalysisKind> analyses,
                      const RunOptions& options);

/// Side-by-side peak reports for the scenario's predefined-time law and its
/// [fixed_time] law, plus the velocity lower-bound row for the predefined
/// side. Requires exactly one law of each kind.
nlohmann::ordered_json compare_report(const Scenario& scenario);

}  // namespace ptc

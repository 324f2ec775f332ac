#pragma once

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "ptc/integrator.hpp"
#include "ptc/laws.hpp"

namespace ptc {

enum class AnalysisKind { simulate, peaks, bound_scan, velocity_check, singularity, compare };

std::string_view analysis_name(AnalysisKind kind);
std::optional<AnalysisKind> parse_analysis_name(std::string_view name);

/// One batch configuration, loaded from a flat key-value scenario file
/// (see README for the grammar). All module invariants are enforced at load
/// time with field-precise ValidationError messages.
struct Scenario {
  Law law;                                // primary law under study
  std::optional<FixedTimeLaw> fixed_side; // second law, for `compare`
  std::vector<double> x0_list;
  IntegrationSettings settings;
  std::vector<int> derivative_orders;     // for `singularity`; default {1,2,3}
  std::vector<AnalysisKind> analyses;     // declared run order
};

/// Parses and validates a scenario file.
/// Throws ParseError (unreadable file, bad syntax, malformed numbers) or
/// ValidationError (missing/duplicate/unknown fields, invariant violations).
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace ptc

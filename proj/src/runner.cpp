#include "ptc/runner.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ptc/analysis.hpp"
#include "ptc/derivatives.hpp"
#include "ptc/errors.hpp"
#include "ptc/io.hpp"

namespace ptc {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

json law_json(const Law& law) {
  json j;
  j["type"] = std::string(law_name(law_kind(law)));
  if (const PredefParams* p = predef_params(law)) {
    j["eta"] = p->eta;
    j["t0"] = p->horizon.t0;
    j["tf"] = p->horizon.tf;
  } else {
    const auto& fixed = std::get<FixedTimeLaw>(law);
    j["k1"] = fixed.params.k1;
    j["k2"] = fixed.params.k2;
    j["alpha"] = fixed.params.alpha;
    j["beta"] = fixed.params.beta;
    j["start"] = fixed.start_time;
    j["span"] = fixed.span;
  }
  return j;
}

json settings_json(const IntegrationSettings& s) {
  return {{"step", s.step}, {"terminal_margin", s.terminal_margin}, {"method", "rk4_fixed"}};
}

json peak_json(const PeakReport& peak) {
  return {{"t_peak", peak.t_peak},
          {"u_peak", peak.u_peak},
          {"magnitude", peak.magnitude},
          {"location", std::string(peak_location_name(peak.location))}};
}

json velocity_json(const VelocityBoundCheck& check) {
  return {{"holds", check.holds},
          {"max_speed", check.max_speed},
          {"required", check.required}};
}

// Integrates each x0 at most once per side and writes each trajectory CSV
// exactly once, so repeated analyses stay cheap and byte-stable.
// Without a sink the store only integrates (used by compare_report).
class TrajectoryStore {
 public:
  TrajectoryStore(const Scenario& scenario, const RunOptions& options,
                  std::vector<std::filesystem::path>* written)
      : scenario_(scenario), options_(options), written_(written) {}

  const Trajectory& primary(std::size_t idx) {
    return fetch(primary_cache_, scenario_.law, idx);
  }

  const Trajectory& fixed_side(std::size_t idx) {
    return fetch(fixed_cache_, Law(*scenario_.fixed_side), idx);
  }

  std::string csv_name(const Law& law, std::size_t idx) const {
    std::ostringstream name;
    name << "trajectory_" << law_name(law_kind(law)) << '_';
    name.width(3);
    name.fill('0');
    name << idx;
    return name.str() + ".csv";
  }

 private:
  const Trajectory& fetch(std::map<std::size_t, Trajectory>& cache, const Law& law,
                          std::size_t idx) {
    auto it = cache.find(idx);
    if (it == cache.end()) {
      Trajectory traj = integrate(law, scenario_.x0_list[idx], scenario_.settings);
      if (written_ != nullptr) {
        const std::filesystem::path file = options_.out_dir / csv_name(law, idx);
        std::ofstream out(file, std::ios::binary);
        if (!out) {
          throw IoError("cannot write " + file.string());
        }
        write_trajectory_csv(out, traj);
        written_->push_back(file);
      }
      it = cache.emplace(idx, std::move(traj)).first;
    }
    return it->second;
  }

  const Scenario& scenario_;
  const RunOptions& options_;
  std::vector<std::filesystem::path>* written_;
  std::map<std::size_t, Trajectory> primary_cache_;
  std::map<std::size_t, Trajectory> fixed_cache_;
};

const PredefParams& require_predef(const Scenario& scenario, AnalysisKind kind) {
  const PredefParams* p = predef_params(scenario.law);
  if (p == nullptr) {
    throw ValidationError(std::string(analysis_name(kind)) +
                          ": requires a predefined-time law (law.type original or corrected)");
  }
  return *p;
}

json simulate_report(const Scenario& scenario, TrajectoryStore& store) {
  json rows = json::array();
  for (std::size_t i = 0; i < scenario.x0_list.size(); ++i) {
    const Trajectory& traj = store.primary(i);
    json row;
    row["x0"] = scenario.x0_list[i];
    row["csv"] = store.csv_name(scenario.law, i);
    row["samples"] = traj.samples.size();
    row["diverged"] = traj.diverged;
    if (!traj.samples.empty()) {
      row["final_t"] = traj.samples.back().t;
      row["final_x"] = traj.samples.back().x;
    }
    if (const PredefParams* p = predef_params(scenario.law); p && !traj.diverged) {
      row["solution_error"] = solution_error(traj, *p, predef_variant(scenario.law));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json peaks_report(const Scenario& scenario, TrajectoryStore& store) {
  json rows = json::array();
  for (std::size_t i = 0; i < scenario.x0_list.size(); ++i) {
    const Trajectory& traj = store.primary(i);
    json row;
    row["x0"] = scenario.x0_list[i];
    row["diverged"] = traj.diverged;
    if (!traj.diverged) {
      row["peak"] = peak_json(find_peak(traj));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json bound_scan_report(const Scenario& scenario) {
  const PredefParams& p = require_predef(scenario, AnalysisKind::bound_scan);
  json rows = json::array();
  for (const BoundScanRow& row : initial_bound_scan(p, scenario.x0_list)) {
    rows.push_back({{"x0", row.x0},
                    {"u0_original", row.u0_original},
                    {"u0_corrected", row.u0_corrected},
                    {"bound", row.bound}});
  }
  return rows;
}

json velocity_check_report(const Scenario& scenario, TrajectoryStore& store) {
  require_predef(scenario, AnalysisKind::velocity_check);
  json rows = json::array();
  for (std::size_t i = 0; i < scenario.x0_list.size(); ++i) {
    const Trajectory& traj = store.primary(i);
    json row;
    row["x0"] = scenario.x0_list[i];
    row["diverged"] = traj.diverged;
    if (!traj.diverged) {
      row["velocity"] = velocity_json(velocity_lower_bound_check(traj));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json singularity_report(const Scenario& scenario) {
  const PredefParams& p = require_predef(scenario, AnalysisKind::singularity);
  json rows = json::array();
  for (double x0 : scenario.x0_list) {
    if (x0 == 0.0) {
      throw ValidationError("singularity: initial.x0 must be nonzero");
    }
    for (int order : scenario.derivative_orders) {
      json row;
      row["x0"] = x0;
      row["order"] = order;
      row["eta"] = p.eta;
      try {
        const SingularityVerdict v = classify_singularity(p, x0, order);
        row["classification"] = std::string(singularity_class_name(v.classification));
        row["slope"] = v.slope;
        row["fit_residual"] = v.fit_residual;
      } catch (const InconclusiveFitError& e) {
        row["classification"] = "inconclusive";
        row["detail"] = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

json compare_rows(const Scenario& scenario, TrajectoryStore& store) {
  json rows = json::array();
  for (std::size_t i = 0; i < scenario.x0_list.size(); ++i) {
    const Trajectory& predef_traj = store.primary(i);
    const Trajectory& fixed_traj = store.fixed_side(i);
    json row;
    row["x0"] = scenario.x0_list[i];
    row["diverged"] = predef_traj.diverged || fixed_traj.diverged;
    if (!predef_traj.diverged) {
      row["predefined"] = peak_json(find_peak(predef_traj));
      row["velocity"] = velocity_json(velocity_lower_bound_check(predef_traj));
    }
    if (!fixed_traj.diverged) {
      row["fixed_time"] = peak_json(find_peak(fixed_traj));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void check_compare_kinds(const Scenario& scenario) {
  const bool primary_predef = predef_params(scenario.law) != nullptr;
  if (!primary_predef || !scenario.fixed_side.has_value()) {
    throw ValidationError(
        "compare: requires one predefined-time [law] and one [fixed_time] law "
        "(mismatched configuration kinds)");
  }
}

}  // namespace

std::vector<std::filesystem::path> run_scenario(const Scenario& scenario,
                                                std::span<const AnalysisKind> analyses,
                                                const RunOptions& options) {
  if (analyses.empty()) {
    throw ValidationError("analyses: none requested (add [analyses] run = ... or a subcommand)");
  }
  std::error_code ec;
  std::filesystem::create_directories(options.out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + options.out_dir.string() + ": " +
                  ec.message());
  }

  std::vector<std::filesystem::path> written;
  TrajectoryStore store(scenario, options, &written);

  for (AnalysisKind kind : analyses) {
    json report;
    report["schema_version"] = kSchemaVersion;
    report["analysis"] = std::string(analysis_name(kind));
    report["law"] = law_json(scenario.law);
    report["integration"] = settings_json(scenario.settings);

    switch (kind) {
      case AnalysisKind::simulate:
        report["rows"] = simulate_report(scenario, store);
        break;
      case AnalysisKind::peaks:
        report["rows"] = peaks_report(scenario, store);
        break;
      case AnalysisKind::bound_scan:
        report["rows"] = bound_scan_report(scenario);
        break;
      case AnalysisKind::velocity_check:
        report["rows"] = velocity_check_report(scenario, store);
        break;
      case AnalysisKind::singularity:
        report["rows"] = singularity_report(scenario);
        break;
      case AnalysisKind::compare:
        check_compare_kinds(scenario);
        report["fixed_time_law"] = law_json(Law(*scenario.fixed_side));
        report["rows"] = compare_rows(scenario, store);
        break;
    }

    const std::filesystem::path file =
        options.out_dir / (std::string(analysis_name(kind)) + "_report.json");
    std::ofstream out(file, std::ios::binary);
    if (!out) {
      throw IoError("cannot write " + file.string());
    }
    out << report.dump(2) << '\n';
    written.push_back(file);
    if (!options.quiet) {
      std::cout << analysis_name(kind) << ": wrote " << file.string() << '\n';
    }
  }
  return written;
}

int run_scenario_file(const std::filesystem::path& path,
                      std::span<const AnalysisKind> analyses,
                      const RunOptions& options) {
  try {
    const Scenario scenario = load_scenario(path);
    run_scenario(scenario, analyses.empty() ? std::span<const AnalysisKind>(scenario.analyses)
                                            : analyses,
                 options);
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error: parse: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: validation: " << e.what() << '\n';
    return 3;
  } catch (const IoError& e) {
    std::cerr << "error: io: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return 5;
  }
}

nlohmann::ordered_json compare_report(const Scenario& scenario) {
  check_compare_kinds(scenario);
  const RunOptions no_output{};
  TrajectoryStore store(scenario, no_output, nullptr);
  json report;
  report["schema_version"] = kSchemaVersion;
  report["analysis"] = "compare";
  report["law"] = law_json(scenario.law);
  report["integration"] = settings_json(scenario.settings);
  report["fixed_time_law"] = law_json(Law(*scenario.fixed_side));
  report["rows"] = compare_rows(scenario, store);
  return report;
}

}  // namespace ptc

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ptc/laws.hpp"

namespace ptc {

/// States beyond this magnitude abort the run and flag it as diverged.
inline constexpr double kStateCap = 1e12;

enum class Method { rk4_fixed };

/// Fixed-step settings. The terminal margin is the standoff from tf at which
/// integration of a predefined-time law stops; the exact clamp takes over
/// from there. Requires 0 < step <= terminal_margin.
struct IntegrationSettings {
  double step;
  double terminal_margin;
  Method method = Method::rk4_fixed;

  IntegrationSettings(double step, double terminal_margin,
                      Method method = Method::rk4_fixed);
};

struct Sample {
  double t;
  double x;
  double u;
};

/// Sampled closed-loop run. Sample times are strictly increasing, the first
/// sample is the initial condition, and each stored u equals the law
/// evaluated at that (t, x). Non-diverged predefined-time runs end with the
/// clamp sample (tf, 0, 0).
struct Trajectory {
  Law law;
  double x0 = 0.0;
  std::vector<Sample> samples;
  bool diverged = false;

  LawKind kind() const { return law_kind(law); }

  /// Index of the clamp sample (tf, 0, 0), if present.
  std::optional<std::size_t> clamp_index() const;

  /// Time of the last sample produced by integration (excludes the clamp).
  double last_integrated_time() const;
};

/// Classical fixed-step RK4 over the law's window.
///
/// Predefined-time laws run on [t0, tf - terminal_margin]; the final step
/// lands exactly on the standoff and the clamp sample (tf, 0, 0) is appended.
/// The fixed-time law runs on [start_time, start_time + span]. A non-finite
/// state or |x| > kStateCap stops the run early and flags it diverged; this
/// is a reported finding, not an error (the original law legitimately does
/// this for large negative x0).
Trajectory integrate(const Law& law, double x0, const IntegrationSettings& settings);

/// max over samples with t < tf of |x_sample - closed_form_state(t, x0, p, variant)|.
/// Requires a predefined-time trajectory whose parameters match p exactly.
double solution_error(const Trajectory& traj, const PredefParams& p,
                      PredefVariant variant);

}  // namespace ptc

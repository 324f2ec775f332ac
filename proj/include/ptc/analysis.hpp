#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ptc/integrator.hpp"
#include "ptc/laws.hpp"

namespace ptc {

enum class PeakLocation { initial, interior, terminal_standoff };

std::string_view peak_location_name(PeakLocation loc);

/// Where and how large the control peak of a run is.
struct PeakReport {
  double t_peak;
  double u_peak;     // signed control value at the peak
  double magnitude;  // |u_peak|
  PeakLocation location;
};

/// One row of the initial-control scan: both laws evaluated at t0 against
/// the corrected law's bound eta/(tf - t0).
struct BoundScanRow {
  double x0;
  double u0_original;
  double u0_corrected;
  double bound;
};

struct VelocityBoundCheck {
  bool holds;
  double max_speed;
  double required;  // |x0| / (tf - t0)
};

struct PeakGrowthPoint {
  double x0;
  double magnitude;
};

/// Locates the sample of maximum |u|, refines the peak by golden-section
/// search between the two neighboring samples (along the closed form for
/// predefined-time laws, along a fine re-integration for the fixed-time
/// law), and classifies the location with tolerance 2*step. The refined
/// magnitude is never below the coarse sampled one.
/// Throws std::invalid_argument for an empty or diverged trajectory.
PeakReport find_peak(const Trajectory& traj);

/// Evaluates both predefined-time laws at t0 over the grid, one row per x0,
/// preserving grid order.
std::vector<BoundScanRow> initial_bound_scan(const PredefParams& p,
                                             std::span<const double> x0_grid);

/// Mean-value check: a trajectory that reaches 0 at tf must somewhere move
/// at speed >= |x0|/(tf - t0). Uses the stored u samples (u = xdot for these
/// closed loops). Requires a converged predefined-time trajectory.
VelocityBoundCheck velocity_lower_bound_check(const Trajectory& traj);

/// Peak magnitude of the corrected closed loop per initial condition.
/// The grid must not contain zeros.
std::vector<PeakGrowthPoint> peak_growth_curve(const PredefParams& p,
                                               std::span<const double> x0_grid,
                                               const IntegrationSettings& settings);

}  // namespace ptc

#include "ptc/analysis.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace ptc {

namespace {

// |u(t)| along the exact solution of a predefined-time closed loop.
double predef_speed(const Law& law, double x0, double t) {
  const PredefParams& p = *predef_params(law);
  const double x = closed_form_state(t, x0, p, predef_variant(law));
  return std::fabs(eval_law(law, t, x));
}

// |u(t)| along a fine re-integration of the fixed-time loop from a bracket
// anchor; the bracket is at most two coarse steps wide, so a fixed substep
// count keeps this both cheap and deterministic.
double fixed_speed(const Law& law, double t_anchor, double x_anchor, double t) {
  constexpr int kSubsteps = 64;
  double x = x_anchor;
  if (t > t_anchor) {
    const double h = (t - t_anchor) / kSubsteps;
    double tt = t_anchor;
    for (int i = 0; i < kSubsteps; ++i) {
      const double k1 = eval_law(law, tt, x);
      const double k2 = eval_law(law, tt + h / 2, x + h / 2 * k1);
      const double k3 = eval_law(law, tt + h / 2, x + h / 2 * k2);
      const double k4 = eval_law(law, tt + h, x + h * k3);
      x += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
      tt = t_anchor + (t - t_anchor) * (i + 1) / kSubsteps;
    }
  }
  return std::fabs(eval_law(law, t, x));
}

struct RefinedPeak {
  double t;
  double value;
};

// Golden-section maximization of phi on [a, b]; the returned candidate is
// the best of the converged interior point and both endpoints.
RefinedPeak golden_max(const std::function<double(double)>& phi, double a, double b) {
  const double fa = phi(a);
  const double fb = phi(b);
  RefinedPeak best = (fa >= fb) ? RefinedPeak{a, fa} : RefinedPeak{b, fb};
  if (b - a <= 0.0) return best;

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double tol = std::max(1e-13, (b - a) * 1e-10);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = phi(c);
  double fd = phi(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = phi(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = phi(d);
    }
  }
  const double tm = 0.5 * (a + b);
  const double fm = phi(tm);
  if (fm > best.value) best = {tm, fm};
  return best;
}

}  // namespace

std::string_view peak_location_name(PeakLocation loc) {
  switch (loc) {
    case PeakLocation::initial: return "initial";
    case PeakLocation::interior: return "interior";
    case PeakLocation::terminal_standoff: return "terminal_standoff";
  }
  return "unknown";
}

PeakReport find_peak(const Trajectory& traj) {
  if (traj.samples.empty()) {
    throw std::invalid_argument("find_peak: empty trajectory");
  }
  if (traj.diverged) {
    throw std::invalid_argument("find_peak: diverged trajectory");
  }

  // Search the integrated samples only; the clamp row is definitional.
  std::size_t last = traj.samples.size() - 1;
  if (const auto clamp = traj.clamp_index(); clamp && *clamp > 0) {
    last = *clamp - 1;
  }

  std::size_t peak_idx = 0;
  for (std::size_t i = 1; i <= last; ++i) {
    if (std::fabs(traj.samples[i].u) > std::fabs(traj.samples[peak_idx].u)) {
      peak_idx = i;
    }
  }

  const Sample& coarse = traj.samples[peak_idx];
  double t_peak = coarse.t;
  double magnitude = std::fabs(coarse.u);
  double u_peak = coarse.u;

  if (last >= 1) {
    const std::size_t lo_idx = (peak_idx > 0) ? peak_idx - 1 : 0;
    const std::size_t hi_idx = (peak_idx < last) ? peak_idx + 1 : last;
    const double lo = traj.samples[lo_idx].t;
    const double hi = traj.samples[hi_idx].t;

    RefinedPeak refined{t_peak, magnitude};
    if (predef_params(traj.law) != nullptr) {
      refined = golden_max(
          [&](double t) { return predef_speed(traj.law, traj.x0, t); }, lo, hi);
    } else {
      const Sample& anchor = traj.samples[lo_idx];
      refined = golden_max(
          [&](double t) { return fixed_speed(traj.law, anchor.t, anchor.x, t); },
          lo, hi);
    }
    // never below the coarse sampled magnitude
    if (refined.value > magnitude) {
      t_peak = refined.t;
      magnitude = refined.value;
      if (predef_params(traj.law) != nullptr) {
        const PredefParams& p = *predef_params(traj.law);
        const double x = closed_form_state(t_peak, traj.x0, p, predef_variant(traj.law));
        u_peak = eval_law(traj.law, t_peak, x);
      } else {
        u_peak = (coarse.u < 0.0) ? -magnitude : magnitude;
      }
    }
  }

  const double start = traj.samples.front().t;
  const double end = traj.last_integrated_time();
  const double step = (traj.samples.size() > 1)
                          ? traj.samples[1].t - traj.samples[0].t
                          : 0.0;
  const double loc_tol = 2.0 * step;

  PeakLocation location = PeakLocation::interior;
  if (t_peak <= start + loc_tol) {
    location = PeakLocation::initial;
  } else if (t_peak >= end - loc_tol) {
    location = PeakLocation::terminal_standoff;
  }
  return {t_peak, u_peak, magnitude, location};
}

std::vector<BoundScanRow> initial_bound_scan(const PredefParams& p,
                                             std::span<const double> x0_grid) {
  if (x0_grid.empty()) {
    throw std::invalid_argument("initial_bound_scan: empty grid");
  }
  const double t0 = p.horizon.t0;
  const double bound = p.eta / p.horizon.duration();
  std::vector<BoundScanRow> rows;
  rows.reserve(x0_grid.size());
  for (double x0 : x0_grid) {
    rows.push_back({x0, eval_original_law(t0, x0, p), eval_corrected_law(t0, x0, p), bound});
  }
  return rows;
}

VelocityBoundCheck velocity_lower_bound_check(const Trajectory& traj) {
  const PredefParams* p = predef_params(traj.law);
  if (p == nullptr) {
    throw std::invalid_argument(
        "velocity_lower_bound_check: trajectory is not from a predefined-time law");
  }
  if (traj.diverged) {
    throw std::invalid_argument("velocity_lower_bound_check: diverged trajectory");
  }
  const double required = std::fabs(traj.x0) / p->horizon.duration();
  double max_speed = 0.0;
  for (const Sample& s : traj.samples) {
    max_speed = std::max(max_speed, std::fabs(s.u));
  }
  return {max_speed >= required * (1.0 - 1e-6), max_speed, required};
}

std::vector<PeakGrowthPoint> peak_growth_curve(const PredefParams& p,
                                               std::span<const double> x0_grid,
                                               const IntegrationSettings& settings) {
  if (x0_grid.empty()) {
    throw std::invalid_argument("peak_growth_curve: empty grid");
  }
  for (double x0 : x0_grid) {
    if (x0 == 0.0) {
      throw std::invalid_argument("peak_growth_curve: grid must not contain 0");
    }
  }
  std::vector<PeakGrowthPoint> points;
  points.reserve(x0_grid.size());
  for (double x0 : x0_grid) {
    const Trajectory traj = integrate(CorrectedLaw{p}, x0, settings);
    points.push_back({x0, find_peak(traj).magnitude});
  }
  return points;
}

}  // namespace ptc

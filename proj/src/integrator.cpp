#include "ptc/integrator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ptc {

namespace {

struct Window {
  double start;
  double end;      // last integrated time (standoff for predefined laws)
  bool clamp;      // append (tf, 0, 0) after a converged run
  double tf = 0.0; // clamp time
};

Window law_window(const Law& law, const IntegrationSettings& settings) {
  if (const PredefParams* p = predef_params(law)) {
    const double duration = p->horizon.duration();
    if (!(settings.terminal_margin < duration / 2.0)) {
      throw std::invalid_argument(
          "integrate: terminal_margin must be < (tf - t0)/2 (got " +
          std::to_string(settings.terminal_margin) + ")");
    }
    return {p->horizon.t0, p->horizon.tf - settings.terminal_margin, true,
            p->horizon.tf};
  }
  const auto& fixed = std::get<FixedTimeLaw>(law);
  return {fixed.start_time, fixed.start_time + fixed.span, false};
}

double rk4_step(const Law& law, double t, double x, double h) {
  const double k1 = eval_law(law, t, x);
  const double k2 = eval_law(law, t + h / 2.0, x + h / 2.0 * k1);
  const double k3 = eval_law(law, t + h / 2.0, x + h / 2.0 * k2);
  const double k4 = eval_law(law, t + h, x + h * k3);
  return x + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

bool state_ok(double x) { return std::isfinite(x) && std::fabs(x) <= kStateCap; }

}  // namespace

IntegrationSettings::IntegrationSettings(double step_, double terminal_margin_,
                                         Method method_)
    : step(step_), terminal_margin(terminal_margin_), method(method_) {
  if (!std::isfinite(step) || !std::isfinite(terminal_margin)) {
    throw std::invalid_argument("IntegrationSettings: step and terminal_margin must be finite");
  }
  if (!(step > 0.0 && step <= terminal_margin)) {
    throw std::invalid_argument(
        "IntegrationSettings: 0 < step <= terminal_margin required (step = " +
        std::to_string(step) + ", terminal_margin = " + std::to_string(terminal_margin) + ")");
  }
}

std::optional<std::size_t> Trajectory::clamp_index() const {
  const PredefParams* p = predef_params(law);
  if (p == nullptr || diverged || samples.empty()) return std::nullopt;
  if (samples.back().t >= p->horizon.tf) return samples.size() - 1;
  return std::nullopt;
}

double Trajectory::last_integrated_time() const {
  if (samples.empty()) {
    throw std::logic_error("Trajectory: no samples");
  }
  if (const auto clamp = clamp_index(); clamp && *clamp > 0) {
    return samples[*clamp - 1].t;
  }
  return samples.back().t;
}

Trajectory integrate(const Law& law, double x0, const IntegrationSettings& settings) {
  if (!std::isfinite(x0)) {
    throw std::invalid_argument("integrate: x0 must be finite");
  }
  const Window window = law_window(law, settings);

  Trajectory traj{law, x0, {}, false};
  const double span = window.end - window.start;
  const std::size_t full_steps =
      static_cast<std::size_t>(std::floor(span / settings.step + 1e-9));
  traj.samples.reserve(full_steps + 3);

  double x = x0;
  double u = eval_law(law, window.start, x);
  traj.samples.push_back({window.start, x, u});
  if (!state_ok(x) || !std::isfinite(u)) {
    traj.diverged = true;
    return traj;
  }

  double t = window.start;
  for (std::size_t i = 1; i <= full_steps && t < window.end; ++i) {
    double t_next = window.start + static_cast<double>(i) * settings.step;
    if (t_next > window.end) t_next = window.end;
    const double x_next = rk4_step(law, t, x, t_next - t);
    if (!state_ok(x_next)) {
      traj.diverged = true;
      return traj;
    }
    const double u_next = eval_law(law, t_next, x_next);
    if (!std::isfinite(u_next)) {
      traj.diverged = true;
      return traj;
    }
    traj.samples.push_back({t_next, x_next, u_next});
    t = t_next;
    x = x_next;
  }
  // land exactly on the window end if the grid did not
  if (t < window.end && window.end - t > settings.step * 1e-12) {
    const double x_next = rk4_step(law, t, x, window.end - t);
    if (!state_ok(x_next)) {
      traj.diverged = true;
      return traj;
    }
    const double u_next = eval_law(law, window.end, x_next);
    if (!std::isfinite(u_next)) {
      traj.diverged = true;
      return traj;
    }
    traj.samples.push_back({window.end, x_next, u_next});
  }

  if (window.clamp) {
    traj.samples.push_back({window.tf, 0.0, 0.0});
  }
  return traj;
}

double solution_error(const Trajectory& traj, const PredefParams& p,
                      PredefVariant variant) {
  const PredefParams* tp = predef_params(traj.law);
  if (tp == nullptr) {
    throw std::invalid_argument("solution_error: trajectory is not from a predefined-time law");
  }
  if (tp->eta != p.eta || tp->horizon.t0 != p.horizon.t0 || tp->horizon.tf != p.horizon.tf) {
    throw std::invalid_argument("solution_error: law parameters do not match the trajectory");
  }
  double worst = 0.0;
  for (const Sample& s : traj.samples) {
    if (s.t >= p.horizon.tf) continue;
    worst = std::max(worst, std::fabs(s.x - closed_form_state(s.t, traj.x0, p, variant)));
  }
  return worst;
}

}  // namespace ptc

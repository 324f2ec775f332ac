#include "ptc/derivatives.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ptc/errors.hpp"

namespace ptc {

namespace {

struct SlopeFit {
  double slope;
  double intercept;
  double max_residual;  // max |y - fit| in log10 units
};

// Least-squares line through (log10 s_m, log10 |d_m|).
SlopeFit fit_loglog(const std::vector<std::pair<double, double>>& pts) {
  const double n = static_cast<double>(pts.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;
  double max_res = 0.0;
  for (const auto& [x, y] : pts) {
    max_res = std::max(max_res, std::fabs(y - (intercept + slope * x)));
  }
  return {slope, intercept, max_res};
}

struct TailProbe {
  std::vector<std::pair<double, double>> samples;  // (t, value)
  SlopeFit fit;
  bool all_zero;
};

TailProbe probe_terminal_tail(const PredefParams& p, double x0, int order) {
  if (x0 == 0.0) {
    throw std::invalid_argument("singularity probe: x0 must be nonzero");
  }
  if (p.horizon.duration() < 1e-2) {
    throw std::invalid_argument(
        "singularity probe: horizon shorter than the probe grid (tf - t0 >= 1e-2 required)");
  }

  TailProbe probe;
  std::vector<std::pair<double, double>> loglog;
  probe.all_zero = true;
  for (int m = 2; m <= 6; ++m) {
    const double s = std::pow(10.0, -m);
    const double t = p.horizon.tf - s;
    const double d = kth_derivative(t, x0, p, order);
    probe.samples.emplace_back(t, d);
    if (std::fabs(d) > 1e-280) {
      probe.all_zero = false;
      loglog.emplace_back(std::log10(p.horizon.tf - t), std::log10(std::fabs(d)));
    }
  }
  if (probe.all_zero) {
    probe.fit = {1.0, 0.0, 0.0};  // vanished below measurable range
    return probe;
  }
  if (loglog.size() < probe.samples.size()) {
    throw InconclusiveFitError(
        "singularity probe: derivative underflowed on part of the grid");
  }
  probe.fit = fit_loglog(loglog);
  if (probe.fit.max_residual > kFitResidualTol) {
    std::ostringstream msg;
    msg << "singularity probe: log-log fit residual " << probe.fit.max_residual
        << " exceeds " << kFitResidualTol
        << " (order " << order << ", eta " << p.eta
        << "); reduce the probe range";
    throw InconclusiveFitError(msg.str());
  }
  return probe;
}

SingularityClass classify_slope(double slope) {
  if (slope > kSlopeTol) return SingularityClass::continuous_zero;
  if (slope < -kSlopeTol) return SingularityClass::divergent;
  return SingularityClass::bounded_discontinuous;
}

}  // namespace

double kth_derivative(double t, double x0, const PredefParams& p, int order) {
  if (order < 1 || order > kMaxDerivativeOrder) {
    throw std::domain_error("kth_derivative: order must be in [1, " +
                            std::to_string(kMaxDerivativeOrder) + "]");
  }
  if (t < p.horizon.t0 || t >= p.horizon.tf) {
    throw std::domain_error("kth_derivative: t must satisfy t0 <= t < tf");
  }

  const double s = p.horizon.tf - t;
  const double c1 = integration_constant(x0, p, PredefVariant::corrected).value;

  // Taylor coefficients of g(s + delta) = C1 (s + delta)^eta up to `order`:
  // g_j = C1 * binom(eta, j) * s^(eta - j).
  std::vector<double> g(static_cast<std::size_t>(order) + 1);
  double binom = 1.0;
  for (int j = 0; j <= order; ++j) {
    if (j > 0) binom *= (p.eta - (j - 1)) / j;
    g[j] = c1 * binom * std::pow(s, p.eta - j);
  }

  // w = ln(1 + g): from (1 + g) w' = g',
  //   w_m = (m g_m - sum_{i=1}^{m-1} (m - i) w_{m-i} g_i) / (m (1 + g_0)).
  std::vector<double> w(static_cast<std::size_t>(order) + 1, 0.0);
  const double p0 = 1.0 + g[0];
  for (int m = 1; m <= order; ++m) {
    double acc = m * g[m];
    for (int i = 1; i < m; ++i) {
      acc -= (m - i) * w[m - i] * g[i];
    }
    w[m] = acc / (m * p0);
  }

  double factorial = 1.0;
  for (int i = 2; i <= order; ++i) factorial *= i;
  const double chain_sign = (order % 2 == 0) ? 1.0 : -1.0;  // from s = tf - t
  return chain_sign * factorial * w[order] * sign(x0);
}

std::string_view singularity_class_name(SingularityClass c) {
  switch (c) {
    case SingularityClass::continuous_zero: return "continuous_zero";
    case SingularityClass::bounded_discontinuous: return "bounded_discontinuous";
    case SingularityClass::divergent: return "divergent";
  }
  return "unknown";
}

DerivativeProfile derivative_profile(const PredefParams& p, double x0, int order) {
  const TailProbe probe = probe_terminal_tail(p, x0, order);
  DerivativeProfile profile;
  profile.order = order;
  profile.samples = probe.samples;
  switch (classify_slope(probe.fit.slope)) {
    case SingularityClass::continuous_zero:
      profile.limit_estimate = 0.0;
      break;
    case SingularityClass::bounded_discontinuous:
      profile.limit_estimate = probe.samples.back().second;
      break;
    case SingularityClass::divergent:
      profile.limit_estimate = std::nullopt;
      break;
  }
  return profile;
}

SingularityVerdict classify_singularity(const PredefParams& p, double x0, int order) {
  const TailProbe probe = probe_terminal_tail(p, x0, order);
  return {classify_slope(probe.fit.slope), order, p.eta, probe.fit.slope,
          probe.fit.max_residual};
}

double min_gain_for_dimension(int n) {
  if (n < 1) {
    throw std::invalid_argument("min_gain_for_dimension: n >= 1 required");
  }
  return static_cast<double>(n);
}

}  // namespace ptc

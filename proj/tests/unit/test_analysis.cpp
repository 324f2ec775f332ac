#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "ptc/analysis.hpp"
#include "ptc/integrator.hpp"
#include "ptc/laws.hpp"

using namespace ptc;

namespace {

PredefParams unit_params(double eta) { return PredefParams(eta, Horizon(0.0, 1.0)); }

IntegrationSettings desk_settings() { return IntegrationSettings(1e-4, 1e-3); }

// Dense-sampling oracle, built on the formula |xdot| = eta C1 s^(eta-1) / (C1 s^eta + 1)
// rather than on the law evaluators the search uses.
struct DensePeak {
  double t;
  double magnitude;
};

DensePeak dense_peak_oracle(double eta, double x0, double t0, double tf, double standoff) {
  const double c1 = std::expm1(std::fabs(x0)) / std::pow(tf - t0, eta);
  const double t_end = tf - standoff;
  DensePeak best{t0, 0.0};
  const int n = 1000000;
  for (int i = 0; i <= n; ++i) {
    const double t = t0 + (t_end - t0) * i / n;
    const double s = tf - t;
    const double speed = eta * c1 * std::pow(s, eta - 1.0) / (c1 * std::pow(s, eta) + 1.0);
    if (speed > best.magnitude) {
      best = {t, speed};
    }
  }
  return best;
}

}  // namespace

TEST_SUITE_BEGIN("analysis");

TEST_CASE("corrected-law peak sits mid-horizon for x0 = ln 5") {
  const PredefParams p = unit_params(2.0);
  const double x0 = std::log(5.0);  // C1 = 4, stationary point s* = 0.5
  const Trajectory traj = integrate(CorrectedLaw{p}, x0, desk_settings());
  const PeakReport peak = find_peak(traj);

  CHECK(peak.t_peak == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(peak.magnitude == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(peak.u_peak < 0.0);
  CHECK(peak.location == PeakLocation::interior);

  const DensePeak oracle = dense_peak_oracle(2.0, x0, 0.0, 1.0, 1e-3);
  CHECK(std::fabs(peak.magnitude - oracle.magnitude) <= 1e-6);
  CHECK(std::fabs(peak.t_peak - oracle.t) <= 1e-4);

  // refinement never loses to the coarse scan
  double coarse = 0.0;
  for (const Sample& s : traj.samples) coarse = std::max(coarse, std::fabs(s.u));
  CHECK(peak.magnitude >= coarse);
  for (const Sample& s : traj.samples) CHECK(peak.magnitude >= std::fabs(s.u));
}

TEST_CASE("fixed-time peak is registered at the initial time") {
  const FixedTimeLaw law(FixedTimeParams(1.0, 1.0, 0.5, 2.0), 0.0, 1.0);
  const Trajectory traj = integrate(law, 4.0, desk_settings());
  const PeakReport peak = find_peak(traj);

  CHECK(peak.t_peak == 0.0);
  CHECK(peak.magnitude == doctest::Approx(18.0).epsilon(1e-12));
  CHECK(peak.location == PeakLocation::initial);
}

TEST_CASE("small initial conditions put the corrected peak at t0") {
  const PredefParams p = unit_params(2.0);
  // x0 < ln(eta): C1 (tf-t0)^eta < eta - 1, stationary point outside the window
  const Trajectory traj = integrate(CorrectedLaw{p}, 0.2, desk_settings());
  const PeakReport peak = find_peak(traj);
  CHECK(peak.location == PeakLocation::initial);

  const DensePeak oracle = dense_peak_oracle(2.0, 0.2, 0.0, 1.0, 1e-3);
  CHECK(oracle.t == 0.0);
  CHECK(std::fabs(peak.magnitude - oracle.magnitude) <= 1e-6);
}

TEST_CASE("peak-location dichotomy against the stationarity threshold") {
  const PredefParams p = unit_params(2.0);
  for (double x0 : {0.2, 0.5, 0.6}) {  // below ln 2
    const double c1 = integration_constant(x0, p, PredefVariant::corrected).value;
    CHECK(c1 < p.eta - 1.0);
    CHECK(find_peak(integrate(CorrectedLaw{p}, x0, desk_settings())).location ==
          PeakLocation::initial);
  }
  for (double x0 : {0.8, 1.0, 3.0}) {  // above ln 2
    const double c1 = integration_constant(x0, p, PredefVariant::corrected).value;
    CHECK(c1 > p.eta - 1.0);
    CHECK(find_peak(integrate(CorrectedLaw{p}, x0, desk_settings())).location ==
          PeakLocation::interior);
  }
}

TEST_CASE("initial bound scan rows") {
  const PredefParams p = unit_params(2.0);
  const std::vector<double> grid = {-5.0, 0.0, 5.0};
  const auto rows = initial_bound_scan(p, grid);
  REQUIRE(rows.size() == 3);

  CHECK(rows[0].x0 == -5.0);
  CHECK(rows[0].u0_original == doctest::Approx(294.82631820515321).epsilon(1e-12));
  CHECK(rows[0].u0_corrected == doctest::Approx(1.9865241060018291).epsilon(1e-12));
  CHECK(rows[0].bound == 2.0);

  CHECK(rows[1].u0_original == 0.0);
  CHECK(rows[1].u0_corrected == 0.0);

  CHECK(rows[2].u0_original == doctest::Approx(-1.9865241060018291).epsilon(1e-12));
  CHECK(rows[2].u0_original == rows[2].u0_corrected);

  CHECK_THROWS_AS(initial_bound_scan(p, std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("quantified corrected bound over the full scan grid") {
  // strict below the bound wherever binary64 resolves the gap; exactly on
  // it where 1 - e^-|x0| saturates (|x0| > 54 ln 2), never above
  for (double eta : {1.5, 2.0, 3.0, 5.0}) {
    for (double duration : {0.5, 1.0, 2.0}) {
      const PredefParams p(eta, Horizon(0.0, duration));
      std::vector<double> grid;
      for (int i = -500; i <= 500; ++i) grid.push_back(i / 10.0);
      for (const BoundScanRow& row : initial_bound_scan(p, grid)) {
        CHECK(std::fabs(row.u0_corrected) <= row.bound);
        if (std::fabs(row.x0) <= 37.0) {
          CHECK(std::fabs(row.u0_corrected) < row.bound);
        }
      }
    }
  }
}

TEST_CASE("velocity lower bound holds on converged runs") {
  const PredefParams p = unit_params(2.0);

  const Trajectory ln5 = integrate(CorrectedLaw{p}, std::log(5.0), desk_settings());
  const VelocityBoundCheck check = velocity_lower_bound_check(ln5);
  CHECK(check.required == doctest::Approx(1.6094379124341003).epsilon(1e-12));
  CHECK(check.max_speed == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(check.holds);

  const VelocityBoundCheck trivial =
      velocity_lower_bound_check(integrate(CorrectedLaw{p}, 0.0, desk_settings()));
  CHECK(trivial.required == 0.0);
  CHECK(trivial.holds);

  const VelocityBoundCheck deep =
      velocity_lower_bound_check(integrate(CorrectedLaw{p}, -10.0, desk_settings()));
  CHECK(deep.required == 10.0);
  CHECK(deep.holds);

  // mean-value invariant across a small grid
  for (double eta : {1.5, 2.0, 3.0}) {
    const PredefParams q = unit_params(eta);
    for (double x0 : {-5.0, -1.0, 0.5, 3.0}) {
      CHECK(velocity_lower_bound_check(integrate(CorrectedLaw{q}, x0, desk_settings()))
                .holds);
    }
  }
}

TEST_CASE("peak growth curve grows with |x0| and dominates the mean value") {
  const PredefParams p = unit_params(2.0);
  const std::vector<double> grid = {1.0, 2.0, 4.0, 8.0};
  const auto points = peak_growth_curve(p, grid, desk_settings());
  REQUIRE(points.size() == 4);
  for (std::size_t i = 0; i < points.size(); ++i) {
    CHECK(points[i].magnitude >= std::fabs(points[i].x0));
    if (i > 0) CHECK(points[i].magnitude > points[i - 1].magnitude);
    // for eta = 2 the peak is exactly sqrt(C1)
    const double c1 = integration_constant(points[i].x0, p, PredefVariant::corrected).value;
    CHECK(points[i].magnitude == doctest::Approx(std::sqrt(c1)).epsilon(1e-6));
  }

  const auto mirrored = peak_growth_curve(p, std::vector<double>{-1.0, 1.0}, desk_settings());
  CHECK(mirrored[0].magnitude == mirrored[1].magnitude);

  const auto single = peak_growth_curve(p, std::vector<double>{std::log(5.0)}, desk_settings());
  CHECK(single[0].magnitude == doctest::Approx(2.0).epsilon(1e-6));

  CHECK_THROWS_AS(peak_growth_curve(p, std::vector<double>{1.0, 0.0}, desk_settings()),
                  std::invalid_argument);
}

TEST_CASE("analysis rejects unusable trajectories") {
  const PredefParams p = unit_params(2.0);

  Trajectory empty{CorrectedLaw{p}, 1.0, {}, false};
  CHECK_THROWS_AS(find_peak(empty), std::invalid_argument);

  Trajectory diverged = integrate(OriginalLaw{p}, -40.0, desk_settings());
  REQUIRE(diverged.diverged);
  CHECK_THROWS_AS(find_peak(diverged), std::invalid_argument);
  CHECK_THROWS_AS(velocity_lower_bound_check(diverged), std::invalid_argument);

  const Trajectory fixed =
      integrate(FixedTimeLaw(FixedTimeParams(1.0, 1.0, 0.5, 2.0), 0.0, 1.0), 1.0,
                desk_settings());
  CHECK_THROWS_AS(velocity_lower_bound_check(fixed), std::invalid_argument);
}

TEST_SUITE_END();

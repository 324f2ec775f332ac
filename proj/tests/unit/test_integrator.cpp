#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "ptc/integrator.hpp"
#include "ptc/laws.hpp"

using namespace ptc;

namespace {

PredefParams unit_params(double eta) { return PredefParams(eta, Horizon(0.0, 1.0)); }

IntegrationSettings desk_settings() { return IntegrationSettings(1e-4, 1e-3); }

}  // namespace

TEST_SUITE_BEGIN("integrator");

TEST_CASE("corrected run tracks the closed form to the standoff") {
  const PredefParams p = unit_params(2.0);
  const double x0 = -std::log(2.0);
  const Trajectory traj = integrate(CorrectedLaw{p}, x0, desk_settings());

  REQUIRE(!traj.diverged);
  REQUIRE(traj.samples.size() > 2);

  const Sample& standoff = traj.samples[traj.samples.size() - 2];
  CHECK(standoff.t == 1.0 - 1e-3);
  CHECK(std::fabs(standoff.x -
                  closed_form_state(standoff.t, x0, p, PredefVariant::corrected)) <= 1e-6);
  CHECK(solution_error(traj, p, PredefVariant::corrected) <= 1e-6);
}

TEST_CASE("equilibrium stays exactly at zero") {
  const PredefParams p = unit_params(2.0);
  const Trajectory traj = integrate(CorrectedLaw{p}, 0.0, desk_settings());
  for (const Sample& s : traj.samples) {
    CHECK(s.x == 0.0);
    CHECK(s.u == 0.0);
  }
  CHECK(solution_error(traj, p, PredefVariant::corrected) == 0.0);
}

TEST_CASE("trajectory structure: grid, clamp, stored controls") {
  const PredefParams p = unit_params(2.0);
  const Trajectory traj = integrate(CorrectedLaw{p}, 0.5, desk_settings());

  CHECK(traj.samples.front().t == 0.0);
  CHECK(traj.samples.front().x == 0.5);
  for (std::size_t i = 1; i < traj.samples.size(); ++i) {
    CHECK(traj.samples[i].t > traj.samples[i - 1].t);
  }

  REQUIRE(traj.clamp_index().has_value());
  const Sample& clamp = traj.samples.back();
  CHECK(clamp.t == 1.0);
  CHECK(clamp.x == 0.0);
  CHECK(clamp.u == 0.0);
  CHECK(traj.last_integrated_time() == 1.0 - 1e-3);

  // stored u must equal re-evaluation bit for bit
  for (std::size_t i = 0; i + 1 < traj.samples.size(); ++i) {
    const Sample& s = traj.samples[i];
    CHECK(s.u == eval_law(traj.law, s.t, s.x));
  }
}

TEST_CASE("fixed-time run decays and nearly settles within span 5") {
  const FixedTimeLaw law(FixedTimeParams(1.0, 1.0, 0.5, 2.0), 0.0, 5.0);
  const Trajectory traj = integrate(law, 4.0, desk_settings());

  REQUIRE(!traj.diverged);
  CHECK(!traj.clamp_index().has_value());
  CHECK(traj.samples.back().t == 5.0);
  // strict decay down to the ~1e-9 floor of the discrete map, bounded
  // ulp-level chatter there
  for (std::size_t i = 1; i < traj.samples.size(); ++i) {
    if (std::fabs(traj.samples[i - 1].x) > 1e-8) {
      CHECK(std::fabs(traj.samples[i].x) < std::fabs(traj.samples[i - 1].x));
    } else {
      CHECK(std::fabs(traj.samples[i].x) <= 1e-8);
    }
  }
  CHECK(std::fabs(traj.samples.back().x) < 1e-3);

  // a 10x finer run agrees at the endpoint
  const Trajectory fine = integrate(law, 4.0, IntegrationSettings(1e-5, 1e-3));
  CHECK(std::fabs(traj.samples.back().x - fine.samples.back().x) <= 1e-6);
}

TEST_CASE("halving the step cuts the error by at least 8x") {
  for (const auto& [eta, x0] : std::vector<std::pair<double, double>>{
           {1.5, -1.0}, {1.5, 3.0}, {2.0, 3.0}}) {
    const PredefParams p = unit_params(eta);
    const double coarse =
        solution_error(integrate(CorrectedLaw{p}, x0, IntegrationSettings(2e-3, 4e-3)),
                       p, PredefVariant::corrected);
    const double fine =
        solution_error(integrate(CorrectedLaw{p}, x0, IntegrationSettings(1e-3, 4e-3)),
                       p, PredefVariant::corrected);
    CHECK(coarse / fine >= 8.0);
  }
}

TEST_CASE("predefined-time contraction is independent of the initial size") {
  const PredefParams p = unit_params(2.0);
  for (double x0 : {-10.0, -1.0, 0.5, 3.0, 10.0}) {
    const Trajectory traj = integrate(CorrectedLaw{p}, x0, desk_settings());
    REQUIRE(!traj.diverged);

    const double c1 = integration_constant(x0, p, PredefVariant::corrected).value;
    const Sample& standoff = traj.samples[traj.samples.size() - 2];
    CHECK(std::fabs(standoff.x) <= std::log1p(c1 * 1e-6) + 1e-6);

    double prev = std::fabs(x0);
    for (const Sample& s : traj.samples) {
      CHECK(std::fabs(s.x) <= prev);
      prev = std::fabs(s.x);
      if (s.t < 1.0 && x0 != 0.0) {
        CHECK(sign(s.x) == sign(x0));
      }
    }
  }
}

TEST_CASE("original-law run coincides bitwise with corrected for x0 > 0") {
  const PredefParams p = unit_params(2.0);
  const Trajectory orig = integrate(OriginalLaw{p}, 3.0, desk_settings());
  const Trajectory corr = integrate(CorrectedLaw{p}, 3.0, desk_settings());
  REQUIRE(orig.samples.size() == corr.samples.size());
  for (std::size_t i = 0; i < orig.samples.size(); ++i) {
    CHECK(orig.samples[i].t == corr.samples[i].t);
    CHECK(orig.samples[i].x == corr.samples[i].x);
    CHECK(orig.samples[i].u == corr.samples[i].u);
  }
  CHECK(solution_error(orig, p, PredefVariant::corrected) ==
        solution_error(corr, p, PredefVariant::corrected));
}

TEST_CASE("blow-up of the original law is reported, not thrown") {
  const PredefParams p = unit_params(2.0);

  // u(t0) ~ 2 e^40: the first step catapults the state past the cap
  const Trajectory big = integrate(OriginalLaw{p}, -40.0, desk_settings());
  CHECK(big.diverged);
  CHECK(!big.samples.empty());
  CHECK(big.samples.size() < 100);
  CHECK(!big.clamp_index().has_value());

  // u(t0) overflows outright: only the initial sample remains
  const Trajectory inf = integrate(OriginalLaw{p}, -800.0, desk_settings());
  CHECK(inf.diverged);
  CHECK(inf.samples.size() == 1);
}

TEST_CASE("solution_error rejects mismatched inputs") {
  const PredefParams p = unit_params(2.0);
  const Trajectory fixed =
      integrate(FixedTimeLaw(FixedTimeParams(1.0, 1.0, 0.5, 2.0), 0.0, 1.0), 1.0,
                desk_settings());
  CHECK_THROWS_AS(solution_error(fixed, p, PredefVariant::corrected),
                  std::invalid_argument);

  const Trajectory corr = integrate(CorrectedLaw{p}, 1.0, desk_settings());
  CHECK_THROWS_AS(solution_error(corr, unit_params(3.0), PredefVariant::corrected),
                  std::invalid_argument);
}

TEST_CASE("settings and window validation") {
  CHECK_THROWS_AS(IntegrationSettings(0.0, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(IntegrationSettings(-1e-4, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(IntegrationSettings(2e-3, 1e-3), std::invalid_argument);

  const PredefParams p = unit_params(2.0);
  CHECK_THROWS_AS(integrate(CorrectedLaw{p}, 1.0, IntegrationSettings(0.1, 0.5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      integrate(CorrectedLaw{p}, std::numeric_limits<double>::infinity(), desk_settings()),
      std::invalid_argument);
}

TEST_SUITE_END();

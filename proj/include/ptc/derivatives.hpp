#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ptc/laws.hpp"

namespace ptc {

/// Highest supported derivative order. Higher orders amplify cancellation
/// without being needed by the gain rule at small system dimensions.
inline constexpr int kMaxDerivativeOrder = 6;

/// |slope| below this is treated as a flat (bounded, nonzero) tail.
inline constexpr double kSlopeTol = 0.1;

/// Max absolute deviation (log10 units) tolerated by the slope fit before
/// the classification is declared inconclusive.
inline constexpr double kFitResidualTol = 0.25;

/// d^k x / dt^k of the corrected closed form x(t) = ln(C1 (tf-t)^eta + 1) sign(x0).
///
/// Taylor-mode evaluation: expand g(s) = C1 s^eta around s = tf - t with the
/// generalized binomial series, push the truncated series through ln(1 + .)
/// with the standard composition recurrence, and read off k! times the k-th
/// coefficient; the substitution s = tf - t contributes the sign (-1)^k.
/// Exact to rounding for all orders supported; no symbolic algebra involved.
///
/// Requires t0 <= t < tf and 1 <= order <= kMaxDerivativeOrder; throws
/// std::domain_error otherwise.
double kth_derivative(double t, double x0, const PredefParams& p, int order);

/// Evidence gathered while probing d^k x/dt^k as t -> tf-.
/// limit_estimate is the extended-real limit: a finite value, or nullopt
/// when the samples grow without bound.
struct DerivativeProfile {
  int order = 1;
  std::vector<std::pair<double, double>> samples;  // (t, d^k x/dt^k), t rising
  std::optional<double> limit_estimate;
};

enum class SingularityClass { continuous_zero, bounded_discontinuous, divergent };

std::string_view singularity_class_name(SingularityClass c);

/// Behavior of the k-th state derivative at the terminal time.
struct SingularityVerdict {
  SingularityClass classification;
  int order;
  double eta;
  double slope;         // fitted log-log slope of |d^k x/dt^k| vs (tf - t)
  double fit_residual;  // max abs deviation of the fit, log10 units
};

/// Samples the k-th derivative at t = tf - 10^-m, m = 2..6, and estimates
/// the terminal limit from the fitted log-log slope.
/// Requires x0 != 0 and tf - t0 >= 1e-2 (the probe grid must stay inside the
/// horizon); throws InconclusiveFitError when the fit residual is above
/// threshold.
DerivativeProfile derivative_profile(const PredefParams& p, double x0, int order);

/// Classifies the terminal behavior of d^k x/dt^k:
///   slope >  kSlopeTol  -> continuous_zero        (vanishes at tf)
///   |slope| <= kSlopeTol -> bounded_discontinuous (finite nonzero limit; the
///                           clamp x == 0 for t >= tf makes it a jump)
///   slope < -kSlopeTol  -> divergent
/// Same preconditions and inconclusive behavior as derivative_profile.
SingularityVerdict classify_singularity(const PredefParams& p, double x0, int order);

/// Strict lower threshold on the gain for an n-dimensional backstepping
/// design: gains must be chosen > n so the state derivatives used by the
/// cascade stay continuous at tf. n = 1 reproduces the standing eta > 1.
double min_gain_for_dimension(int n);

}  // namespace ptc

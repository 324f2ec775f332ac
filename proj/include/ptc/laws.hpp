#pragma once

#include <string_view>
#include <variant>

namespace ptc {

/// sign(x) with sign(0) = 0, so odd laws are exactly zero at the origin.
inline double sign(double x) { return (x > 0.0) ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

/// Time window (t0, tf) shared by the predefined-time objects. t0 < tf strictly.
struct Horizon {
  double t0;
  double tf;

  Horizon(double t0, double tf);
  double duration() const { return tf - t0; }
};

/// Gain and horizon of the predefined-time laws. Requires eta > 1.
struct PredefParams {
  double eta;
  Horizon horizon;

  PredefParams(double eta, Horizon horizon);
};

/// Gains and exponents of the fixed-time law:
/// k1, k2 > 0, 0 < alpha < 1, beta > 1.
struct FixedTimeParams {
  double k1;
  double k2;
  double alpha;
  double beta;

  FixedTimeParams(double k1, double k2, double alpha, double beta);
};

/// Which of the two predefined-time closed forms is meant.
enum class PredefVariant { original, corrected };

/// Constant of the closed-form solution:
///   original:  C  = (e^x0 - 1)     / (tf - t0)^eta
///   corrected: C1 = (e^|x0| - 1)   / (tf - t0)^eta
struct IntegrationConstant {
  double value;
  PredefVariant variant;
};

/// u(t, x) = -eta (e^x - 1) / (e^x (tf - t)).
///
/// Evaluated as eta*expm1(-x)/(tf - t), which is algebraically identical
/// and does not underflow for very negative x. Singular at t = tf: throws
/// std::domain_error for t >= tf. Unbounded as x -> -inf (grows like e^|x|).
double eval_original_law(double t, double x, const PredefParams& p);

/// u(t, x) = -eta (e^|x| - 1) / (e^|x| (tf - t)) * sign(x).
///
/// Odd in x, continuous everywhere, and |u| < eta/(tf - t) strictly.
/// Coincides with eval_original_law for x >= 0. Throws std::domain_error
/// for t >= tf.
double eval_corrected_law(double t, double x, const PredefParams& p);

/// u(x) = -k1 |x|^alpha sign(x) - k2 |x|^beta sign(x). Autonomous, odd,
/// |u| strictly increasing in |x|.
double eval_fixed_time_law(double x, const FixedTimeParams& p);

/// Constant C (original) or C1 (corrected) encoding the initial condition.
IntegrationConstant integration_constant(double x0, const PredefParams& p,
                                         PredefVariant variant);

/// Closed-form solution of the predefined-time closed loops:
///   original:  x(t) = ln(C (tf - t)^eta + 1)            for t in [t0, tf]
///   corrected: x(t) = ln(C1 (tf - t)^eta + 1) sign(x0)  for t in [t0, tf]
/// and exactly 0.0 for t >= tf (the clamp is part of the definition).
///
/// Computed as log1p(expm1(.)*((tf-t)/(tf-t0))^eta) so that the value at
/// t = t0 reproduces x0 at machine precision; t == t0 returns x0 exactly.
double closed_form_state(double t, double x0, const PredefParams& p,
                         PredefVariant variant);

// ---------------------------------------------------------------------------
// Law handles used by the integrator and the analysis layer.

enum class LawKind { original, corrected, fixed_time };

struct OriginalLaw {
  PredefParams params;
};

struct CorrectedLaw {
  PredefParams params;
};

/// The fixed-time law plus the window [start_time, start_time + span] it is
/// integrated over (the law itself is autonomous and has no horizon).
struct FixedTimeLaw {
  FixedTimeParams params;
  double start_time;
  double span;

  FixedTimeLaw(FixedTimeParams params, double start_time, double span);
};

using Law = std::variant<OriginalLaw, CorrectedLaw, FixedTimeLaw>;

LawKind law_kind(const Law& law);
std::string_view law_name(LawKind kind);

/// Right-hand side u(t, x) of the selected closed loop.
double eval_law(const Law& law, double t, double x);

/// Parameters of a predefined-time law, or nullptr for the fixed-time law.
const PredefParams* predef_params(const Law& law);

/// Variant tag for a predefined-time law; throws for the fixed-time law.
PredefVariant predef_variant(const Law& law);

}  // namespace ptc

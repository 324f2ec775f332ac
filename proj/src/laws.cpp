#include "ptc/laws.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ptc {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + ": must be finite");
  }
}

void require_before_terminal(double t, const Horizon& h) {
  if (t >= h.tf) {
    throw std::domain_error("law is singular at t >= tf (t = " +
                            std::to_string(t) + ", tf = " + std::to_string(h.tf) + ")");
  }
}

}  // namespace

Horizon::Horizon(double t0_, double tf_) : t0(t0_), tf(tf_) {
  require_finite(t0, "Horizon.t0");
  require_finite(tf, "Horizon.tf");
  if (!(t0 < tf)) {
    throw std::invalid_argument("Horizon: t0 < tf required (got t0 = " +
                                std::to_string(t0) + ", tf = " + std::to_string(tf) + ")");
  }
}

PredefParams::PredefParams(double eta_, Horizon horizon_)
    : eta(eta_), horizon(horizon_) {
  require_finite(eta, "PredefParams.eta");
  if (!(eta > 1.0)) {
    throw std::invalid_argument("PredefParams: eta > 1 required (got " +
                                std::to_string(eta) + ")");
  }
}

FixedTimeParams::FixedTimeParams(double k1_, double k2_, double alpha_, double beta_)
    : k1(k1_), k2(k2_), alpha(alpha_), beta(beta_) {
  require_finite(k1, "FixedTimeParams.k1");
  require_finite(k2, "FixedTimeParams.k2");
  require_finite(alpha, "FixedTimeParams.alpha");
  require_finite(beta, "FixedTimeParams.beta");
  if (!(k1 > 0.0)) throw std::invalid_argument("FixedTimeParams: k1 > 0 required");
  if (!(k2 > 0.0)) throw std::invalid_argument("FixedTimeParams: k2 > 0 required");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("FixedTimeParams: 0 < alpha < 1 required");
  }
  if (!(beta > 1.0)) throw std::invalid_argument("FixedTimeParams: beta > 1 required");
}

FixedTimeLaw::FixedTimeLaw(FixedTimeParams params_, double start_time_, double span_)
    : params(params_), start_time(start_time_), span(span_) {
  require_finite(start_time, "FixedTimeLaw.start_time");
  require_finite(span, "FixedTimeLaw.span");
  if (!(span > 0.0)) {
    throw std::invalid_argument("FixedTimeLaw: span > 0 required (got " +
                                std::to_string(span) + ")");
  }
}

double eval_original_law(double t, double x, const PredefParams& p) {
  require_before_terminal(t, p.horizon);
  // -eta*(1 - e^-x)/(tf - t), written with expm1 so e^x never underflows
  // against the denominator.
  return p.eta * std::expm1(-x) / (p.horizon.tf - t);
}

double eval_corrected_law(double t, double x, const PredefParams& p) {
  require_before_terminal(t, p.horizon);
  return p.eta * std::expm1(-std::fabs(x)) / (p.horizon.tf - t) * sign(x);
}

double eval_fixed_time_law(double x, const FixedTimeParams& p) {
  const double ax = std::fabs(x);
  return -(p.k1 * std::pow(ax, p.alpha) + p.k2 * std::pow(ax, p.beta)) * sign(x);
}

IntegrationConstant integration_constant(double x0, const PredefParams& p,
                                         PredefVariant variant) {
  const double arg = (variant == PredefVariant::original) ? x0 : std::fabs(x0);
  const double value = std::expm1(arg) / std::pow(p.horizon.duration(), p.eta);
  return {value, variant};
}

double closed_form_state(double t, double x0, const PredefParams& p,
                         PredefVariant variant) {
  if (t >= p.horizon.tf) return 0.0;  // clamp: x(t) = 0 for t >= tf
  if (t == p.horizon.t0) return x0;
  // ln(C (tf-t)^eta + 1) with C = expm1(.)/(tf-t0)^eta, evaluated in ratio
  // form to keep the t -> t0 limit exact for large |x0|.
  const double ratio = (p.horizon.tf - t) / p.horizon.duration();
  const double shape = std::pow(ratio, p.eta);
  if (variant == PredefVariant::original) {
    return std::log1p(std::expm1(x0) * shape);
  }
  return std::log1p(std::expm1(std::fabs(x0)) * shape) * sign(x0);
}

LawKind law_kind(const Law& law) {
  if (std::holds_alternative<OriginalLaw>(law)) return LawKind::original;
  if (std::holds_alternative<CorrectedLaw>(law)) return LawKind::corrected;
  return LawKind::fixed_time;
}

std::string_view law_name(LawKind kind) {
  switch (kind) {
    case LawKind::original: return "original";
    case LawKind::corrected: return "corrected";
    case LawKind::fixed_time: return "fixed_time";
  }
  return "unknown";
}

double eval_law(const Law& law, double t, double x) {
  return std::visit(
      [&](const auto& l) -> double {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, OriginalLaw>) {
          return eval_original_law(t, x, l.params);
        } else if constexpr (std::is_same_v<T, CorrectedLaw>) {
          return eval_corrected_law(t, x, l.params);
        } else {
          return eval_fixed_time_law(x, l.params);
        }
      },
      law);
}

const PredefParams* predef_params(const Law& law) {
  if (const auto* o = std::get_if<OriginalLaw>(&law)) return &o->params;
  if (const auto* c = std::get_if<CorrectedLaw>(&law)) return &c->params;
  return nullptr;
}

PredefVariant predef_variant(const Law& law) {
  if (std::holds_alternative<OriginalLaw>(law)) return PredefVariant::original;
  if (std::holds_alternative<CorrectedLaw>(law)) return PredefVariant::corrected;
  throw std::invalid_argument("fixed-time law has no closed-form variant");
}

}  // namespace ptc

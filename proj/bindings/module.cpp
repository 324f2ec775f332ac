#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ptc/analysis.hpp"
#include "ptc/derivatives.hpp"
#include "ptc/errors.hpp"
#include "ptc/integrator.hpp"
#include "ptc/laws.hpp"

namespace py = pybind11;
using namespace ptc;

namespace {

std::string sample_repr(const Sample& s) {
  std::ostringstream out;
  out << "Sample(t=" << s.t << ", x=" << s.x << ", u=" << s.u << ")";
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Predefined-time controller laboratory: control laws, closed forms, "
            "RK4 integration with terminal standoff, and peak/bound analysis.";

  py::register_exception<InconclusiveFitError>(m, "InconclusiveFitError");

  py::enum_<PredefVariant>(m, "PredefVariant")
      .value("original", PredefVariant::original)
      .value("corrected", PredefVariant::corrected);

  py::enum_<SingularityClass>(m, "SingularityClass")
      .value("continuous_zero", SingularityClass::continuous_zero)
      .value("bounded_discontinuous", SingularityClass::bounded_discontinuous)
      .value("divergent", SingularityClass::divergent);

  py::enum_<PeakLocation>(m, "PeakLocation")
      .value("initial", PeakLocation::initial)
      .value("interior", PeakLocation::interior)
      .value("terminal_standoff", PeakLocation::terminal_standoff);

  py::class_<Horizon>(m, "Horizon")
      .def(py::init<double, double>(), py::arg("t0"), py::arg("tf"))
      .def_readonly("t0", &Horizon::t0)
      .def_readonly("tf", &Horizon::tf)
      .def("duration", &Horizon::duration);

  py::class_<PredefParams>(m, "PredefParams")
      .def(py::init<double, Horizon>(), py::arg("eta"), py::arg("horizon"))
      .def(py::init([](double eta, double t0, double tf) {
             return PredefParams(eta, Horizon(t0, tf));
           }),
           py::arg("eta"), py::arg("t0"), py::arg("tf"))
      .def_readonly("eta", &PredefParams::eta)
      .def_readonly("horizon", &PredefParams::horizon);

  py::class_<FixedTimeParams>(m, "FixedTimeParams")
      .def(py::init<double, double, double, double>(), py::arg("k1"), py::arg("k2"),
           py::arg("alpha"), py::arg("beta"))
      .def_readonly("k1", &FixedTimeParams::k1)
      .def_readonly("k2", &FixedTimeParams::k2)
      .def_readonly("alpha", &FixedTimeParams::alpha)
      .def_readonly("beta", &FixedTimeParams::beta);

  py::class_<IntegrationConstant>(m, "IntegrationConstant")
      .def_readonly("value", &IntegrationConstant::value)
      .def_readonly("variant", &IntegrationConstant::variant);

  py::class_<OriginalLaw>(m, "OriginalLaw")
      .def(py::init<PredefParams>(), py::arg("params"))
      .def_readonly("params", &OriginalLaw::params);

  py::class_<CorrectedLaw>(m, "CorrectedLaw")
      .def(py::init<PredefParams>(), py::arg("params"))
      .def_readonly("params", &CorrectedLaw::params);

  py::class_<FixedTimeLaw>(m, "FixedTimeLaw")
      .def(py::init<FixedTimeParams, double, double>(), py::arg("params"),
           py::arg("start_time") = 0.0, py::arg("span") = 1.0)
      .def_readonly("params", &FixedTimeLaw::params)
      .def_readonly("start_time", &FixedTimeLaw::start_time)
      .def_readonly("span", &FixedTimeLaw::span);

  py::class_<IntegrationSettings>(m, "IntegrationSettings")
      .def(py::init<double, double>(), py::arg("step"), py::arg("terminal_margin"))
      .def_readonly("step", &IntegrationSettings::step)
      .def_readonly("terminal_margin", &IntegrationSettings::terminal_margin);

  py::class_<Sample>(m, "Sample")
      .def_readonly("t", &Sample::t)
      .def_readonly("x", &Sample::x)
      .def_readonly("u", &Sample::u)
      .def("__repr__", &sample_repr);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("x0", &Trajectory::x0)
      .def_readonly("samples", &Trajectory::samples)
      .def_readonly("diverged", &Trajectory::diverged)
      .def_property_readonly(
          "law_kind", [](const Trajectory& t) { return std::string(law_name(t.kind())); })
      .def("last_integrated_time", &Trajectory::last_integrated_time)
      .def("__len__", [](const Trajectory& t) { return t.samples.size(); });

  py::class_<PeakReport>(m, "PeakReport")
      .def_readonly("t_peak", &PeakReport::t_peak)
      .def_readonly("u_peak", &PeakReport::u_peak)
      .def_readonly("magnitude", &PeakReport::magnitude)
      .def_readonly("location", &PeakReport::location);

  py::class_<BoundScanRow>(m, "BoundScanRow")
      .def_readonly("x0", &BoundScanRow::x0)
      .def_readonly("u0_original", &BoundScanRow::u0_original)
      .def_readonly("u0_corrected", &BoundScanRow::u0_corrected)
      .def_readonly("bound", &BoundScanRow::bound);

  py::class_<VelocityBoundCheck>(m, "VelocityBoundCheck")
      .def_readonly("holds", &VelocityBoundCheck::holds)
      .def_readonly("max_speed", &VelocityBoundCheck::max_speed)
      .def_readonly("required", &VelocityBoundCheck::required);

  py::class_<PeakGrowthPoint>(m, "PeakGrowthPoint")
      .def_readonly("x0", &PeakGrowthPoint::x0)
      .def_readonly("magnitude", &PeakGrowthPoint::magnitude);

  py::class_<SingularityVerdict>(m, "SingularityVerdict")
      .def_readonly("classification", &SingularityVerdict::classification)
      .def_readonly("order", &SingularityVerdict::order)
      .def_readonly("eta", &SingularityVerdict::eta)
      .def_readonly("slope", &SingularityVerdict::slope)
      .def_readonly("fit_residual", &SingularityVerdict::fit_residual);

  py::class_<DerivativeProfile>(m, "DerivativeProfile")
      .def_readonly("order", &DerivativeProfile::order)
      .def_readonly("samples", &DerivativeProfile::samples)
      .def_readonly("limit_estimate", &DerivativeProfile::limit_estimate);

  m.def("eval_original_law", &eval_original_law, py::arg("t"), py::arg("x"),
        py::arg("params"));
  m.def("eval_corrected_law", &eval_corrected_law, py::arg("t"), py::arg("x"),
        py::arg("params"));
  m.def("eval_fixed_time_law", &eval_fixed_time_law, py::arg("x"), py::arg("params"));
  m.def("integration_constant", &integration_constant, py::arg("x0"), py::arg("params"),
        py::arg("variant"));
  m.def("closed_form_state", &closed_form_state, py::arg("t"), py::arg("x0"),
        py::arg("params"), py::arg("variant"));

  m.def("kth_derivative", &kth_derivative, py::arg("t"), py::arg("x0"), py::arg("params"),
        py::arg("order"));
  m.def("derivative_profile", &derivative_profile, py::arg("params"), py::arg("x0"),
        py::arg("order"));
  m.def("classify_singularity", &classify_singularity, py::arg("params"), py::arg("x0"),
        py::arg("order"));
  m.def("min_gain_for_dimension", &min_gain_for_dimension, py::arg("n"));

  // one overload per law type; pybind11 cannot default-construct the variant
  m.def(
      "integrate",
      [](const OriginalLaw& law, double x0, const IntegrationSettings& settings) {
        return integrate(law, x0, settings);
      },
      py::arg("law"), py::arg("x0"), py::arg("settings"));
  m.def(
      "integrate",
      [](const CorrectedLaw& law, double x0, const IntegrationSettings& settings) {
        return integrate(law, x0, settings);
      },
      py::arg("law"), py::arg("x0"), py::arg("settings"));
  m.def(
      "integrate",
      [](const FixedTimeLaw& law, double x0, const IntegrationSettings& settings) {
        return integrate(law, x0, settings);
      },
      py::arg("law"), py::arg("x0"), py::arg("settings"));
  m.def("solution_error", &solution_error, py::arg("trajectory"), py::arg("params"),
        py::arg("variant"));

  m.def("find_peak", &find_peak, py::arg("trajectory"));
  m.def(
      "initial_bound_scan",
      [](const PredefParams& p, const std::vector<double>& grid) {
        return initial_bound_scan(p, grid);
      },
      py::arg("params"), py::arg("x0_grid"));
  m.def("velocity_lower_bound_check", &velocity_lower_bound_check, py::arg("trajectory"));
  m.def(
      "peak_growth_curve",
      [](const PredefParams& p, const std::vector<double>& grid,
         const IntegrationSettings& settings) {
        return peak_growth_curve(p, grid, settings);
      },
      py::arg("params"), py::arg("x0_grid"), py::arg("settings"));

  m.attr("__version__") = "0.1.0";
}

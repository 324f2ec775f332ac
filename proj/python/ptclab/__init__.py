"""Numerical laboratory for predefined-time convergent scalar controllers.

Thin python surface over the C++ core: control-law evaluation, closed-form
solutions, fixed-step RK4 integration with a terminal standoff, derivative
classification at the terminal time, and peak/bound analysis.
"""

from ptclab._core import (  # noqa: F401
    BoundScanRow,
    CorrectedLaw,
    DerivativeProfile,
    FixedTimeLaw,
    FixedTimeParams,
    Horizon,
    InconclusiveFitError,
    IntegrationConstant,
    IntegrationSettings,
    OriginalLaw,
    PeakGrowthPoint,
    PeakLocation,
    PeakReport,
    PredefParams,
    PredefVariant,
    Sample,
    SingularityClass,
    SingularityVerdict,
    Trajectory,
    VelocityBoundCheck,
    __version__,
    classify_singularity,
    closed_form_state,
    derivative_profile,
    eval_corrected_law,
    eval_fixed_time_law,
    eval_original_law,
    find_peak,
    initial_bound_scan,
    integrate,
    integration_constant,
    kth_derivative,
    min_gain_for_dimension,
    peak_growth_curve,
    solution_error,
    velocity_lower_bound_check,
)

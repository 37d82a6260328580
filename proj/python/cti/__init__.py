"""Cashless transaction index toolkit.

Computes a 0-10 cashlessness index from the effective conductivity of a
cash/cashless transaction mixture, calibrates share-growth curves from
country time series, and projects growth rates and policy scenarios.
"""

from ._core import (
    CalibrationReport,
    CountrySeries,
    CurveWidth,
    EmaConfig,
    FitModel,
    LogisticFit,
    ModelChoice,
    PolicyEvent,
    PolicyPoint,
    RateSample,
    Region,
    Scenario,
    ScenarioRow,
    ShareCurveParams,
    ShareUnit,
    __version__,
    alpha_prime,
    asymptote_linear,
    asymptote_quadratic,
    calibrate_country,
    calibration_threshold,
    classify,
    compare_scenarios,
    cti_from_share,
    curve_width,
    dcti_dt,
    delta_t0,
    dsigma_dp,
    dsigma_dt,
    ema_insulator_threshold,
    fit_transform,
    half_share_time,
    load_series_file,
    log_odds,
    make_scenario,
    match_from_linear,
    match_from_quadratic,
    modulation_factor,
    project_policy,
    rate_profile,
    select_model,
    share_at,
    share_from_cti,
    share_from_log_odds,
    slope_a2,
    solve_general,
    solve_two_phase,
    y_extremum_time,
    y_trial,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]

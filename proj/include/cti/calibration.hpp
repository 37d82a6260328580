#pragma once

#include "cti/series.hpp"
#include "cti/share_dynamics.hpp"

#include <string>
#include <vector>

namespace cti {

/// Characteristic width of the share curve. t1 and t2 are the threshold
/// and half-share crossings of the fitted transform (quadratic fits) or
/// the half-share and 1-p_c crossings (linear fits); tau = 2 (t2 - t1).
struct CurveWidth {
    double tau_years = 0.0;
    double t_half_years = 0.0;
    double t1_years = 0.0;
    double t2_years = 0.0;
};

struct DeltaT0 {
    double years = 0.0;
    bool clamped = false; // true when the raw rule went negative
};

enum class ModelChoice { Auto, Linear, Quadratic };

struct CalibrationReport {
    std::string country;
    LogisticFit linear;
    LogisticFit quadratic;
    FitModel selected = FitModel::Linear;
    ShareCurveParams params;
    CurveWidth width;
    std::vector<std::string> warnings;
};

/// Ordinary least squares of y = ln((1-p)/p) on {1, t} or {1, t, t^2},
/// t counted from the earliest year. Needs 3 points for linear fits and
/// 4 for quadratic ones.
LogisticFit fit_transform(const CountrySeries& series, FitModel model);

/// Higher plain R^2 wins; ties within 1e-9 go to the linear model.
FitModel select_model(const LogisticFit& linear, const LogisticFit& quadratic);

/// Crossing times and width of the fitted transform, using the
/// percolation threshold p_c = 1/(z-1). Quadratic roots are taken on the
/// decreasing branch of the parabola.
CurveWidth curve_width(const LogisticFit& fit, double z);

/// Lead-time rule: |t_half| + tau when t_half < 0, tau - t_half otherwise,
/// clamped at 0.
DeltaT0 delta_t0(const CurveWidth& width);

/// Full per-country pipeline: fit both models, select (or honor the
/// override), derive the share-curve parameters via the matching maps.
/// Linear-class countries get delta_t0 from the width rule and the
/// assumed gamma; quadratic-class countries get delta_t0 = 0.
CalibrationReport calibrate_country(const CountrySeries& series, double gamma_assumed,
                                    double T_years, ModelChoice choice = ModelChoice::Auto,
                                    double z = 4.0);

} // namespace cti

#pragma once

#include "cti/ema.hpp"
#include "cti/share_dynamics.hpp"

#include <vector>

namespace cti {

struct RateSample {
    double t_years = 0.0;
    double share = 0.0;
    double sigma_e = 0.0;
    double dsigma_dt = 0.0; // conductivity / year
    double dcti_dt = 0.0;   // CTI units / year
};

/// d sigma_e / dp from the root formula of the two-phase quadratic;
/// positive for sigma_cashless > sigma_cash. Requires 0 < p < 1.
double dsigma_dp(double p, const EmaConfig& cfg);

/// d sigma_e / dt along the share curve, evaluated in the
/// share-shifted form with the growth factor a2(t) p (1-p).
double dsigma_dt(double t, const ShareCurveParams& params, const EmaConfig& cfg);

/// d CTI / dt consistent with the log-scale index definition:
/// 10 / ln(sigma_cashless/sigma_cash) * (1/sigma_e) * d sigma_e/dt.
double dcti_dt(double t, const ShareCurveParams& params, const EmaConfig& cfg);

/// All rate quantities on a time grid, ready for CSV emission.
std::vector<RateSample> rate_profile(const ShareCurveParams& params, const EmaConfig& cfg,
                                     const std::vector<double>& t_grid);

} // namespace cti

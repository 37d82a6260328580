#include "cti/rate.hpp"

#include <cmath>
#include <stdexcept>

namespace cti {

double dsigma_dp(double p, const EmaConfig& cfg) {
    cfg.validate();
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("share must be strictly inside (0,1)");
    }
    const QuadraticCoeffs qc = two_phase_coeffs(p, cfg);
    const double root = std::sqrt(qc.discriminant());
    const double db_dp = -(cfg.A() + 1.0) * cfg.delta_sigma();
    return 1.0 / (2.0 * qc.a) * db_dp * (qc.b / root - 1.0);
}

double dsigma_dt(double t, const ShareCurveParams& params, const EmaConfig& cfg) {
    cfg.validate();
    const double p = share_at(t, params);
    const double a2 = slope_a2(t, params);
    const double scale = (cfg.A() + 1.0) * cfg.delta_sigma();
    // Express the root-formula derivative through the share-shifted
    // variable u = -B(p)/scale and the rescaled radical.
    const QuadraticCoeffs qc = two_phase_coeffs(p, cfg);
    const double u = -qc.b / scale;
    const double radical = std::sqrt(qc.discriminant()) / scale;
    return scale / (2.0 * cfg.A()) * (u / radical + 1.0) * a2 * p * (1.0 - p);
}

double dcti_dt(double t, const ShareCurveParams& params, const EmaConfig& cfg) {
    const double p = share_at(t, params);
    const double sigma_e = solve_two_phase(p, cfg);
    return 10.0 / std::log(cfg.sigma_cashless / cfg.sigma_cash) / sigma_e *
           dsigma_dt(t, params, cfg);
}

std::vector<RateSample> rate_profile(const ShareCurveParams& params, const EmaConfig& cfg,
                                     const std::vector<double>& t_grid) {
    std::vector<RateSample> samples;
    samples.reserve(t_grid.size());
    for (double t : t_grid) {
        RateSample s;
        s.t_years = t;
        s.share = share_at(t, params);
        s.sigma_e = solve_two_phase(s.share, cfg);
        s.dsigma_dt = dsigma_dt(t, params, cfg);
        s.dcti_dt = 10.0 / std::log(cfg.sigma_cashless / cfg.sigma_cash) / s.sigma_e *
                    s.dsigma_dt;
        samples.push_back(s);
    }
    return samples;
}

} // namespace cti

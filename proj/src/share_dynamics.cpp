#include "cti/share_dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace cti {

void ShareCurveParams::validate() const {
    if (!(alpha > 0.0)) throw std::domain_error("alpha must be > 0");
    if (!(beta > 0.0)) throw std::domain_error("beta must be > 0");
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::domain_error("gamma must be in (0,1)");
    if (!(T_years > 0.0)) throw std::domain_error("T_years must be > 0");
    if (!(delta_t0_years >= 0.0)) throw std::domain_error("delta_t0_years must be >= 0");
}

const char* to_string(FitModel m) {
    return m == FitModel::Linear ? "linear" : "quadratic";
}

double log_odds(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("share must be strictly inside (0,1)");
    }
    return std::log((1.0 - p) / p);
}

double share_from_log_odds(double y) {
    if (y > 0.0) {
        const double e = std::exp(-y);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(y));
}

double eval_fit(const LogisticFit& fit, double t) {
    if (fit.model == FitModel::Linear) {
        return -fit.a2 * t + fit.mu1;
    }
    return -0.5 * fit.b * t * t - fit.a20 * t + fit.mu2;
}

double y_trial(double t, const ShareCurveParams& params) {
    return (params.alpha * t + params.beta) * (params.gamma - std::tanh(t / params.T_years));
}

double share_at(double t, const ShareCurveParams& params) {
    return share_from_log_odds(y_trial(t, params));
}

double slope_a2(double t, const ShareCurveParams& params) {
    const double x = t / params.T_years;
    const double sech = 1.0 / std::cosh(x);
    return -params.alpha * (params.gamma - std::tanh(x)) +
           (params.alpha * t + params.beta) / params.T_years * sech * sech;
}

std::optional<double> y_extremum_time(const ShareCurveParams& params) {
    params.validate();
    if (!(slope_a2(0.0, params) < 0.0)) {
        return std::nullopt;
    }
    // a2 starts negative and tends to alpha(1-gamma) > 0; bracket the first
    // sign change in (0, 10T], then bisect.
    const double t_max = 10.0 * params.T_years;
    double lo = 0.0;
    double hi = 0.0;
    const int steps = 4096;
    for (int i = 1; i <= steps; ++i) {
        const double t = t_max * static_cast<double>(i) / steps;
        if (slope_a2(t, params) >= 0.0) {
            hi = t;
            break;
        }
        lo = t;
    }
    if (hi == 0.0) {
        return std::nullopt; // no crossing up to 10T
    }
    for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (slope_a2(mid, params) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double t_star = 0.5 * (lo + hi);
    if (!(std::abs(slope_a2(t_star, params)) < 1e-10)) {
        throw std::runtime_error("y_extremum_time: root polish failed");
    }
    return t_star;
}

double half_share_time(const ShareCurveParams& params) {
    if (!(params.gamma >= 0.0 && params.gamma < 1.0)) {
        throw std::domain_error("gamma must be in (0,1)");
    }
    return params.T_years * std::atanh(params.gamma);
}

double asymptote_linear(const ShareCurveParams& params, double t) {
    return (params.gamma - 1.0) * (params.alpha * t + params.beta);
}

double asymptote_quadratic(const ShareCurveParams& params, double t) {
    return -(params.alpha / params.T_years) * t * t +
           (params.alpha * params.gamma - params.beta / params.T_years) * t +
           params.beta * params.gamma;
}

double modulation_factor(double t, const ShareCurveParams& params) {
    if (params.gamma == 1.0) {
        throw std::domain_error("modulation factor undefined at gamma = 1");
    }
    return (params.gamma - std::tanh(t / params.T_years)) / (params.gamma - 1.0);
}

QuadraticMatch match_from_quadratic(double b, double a20, double mu2, double T) {
    if (!(b > 0.0)) throw std::domain_error("quadratic match requires b > 0");
    if (!(T > 0.0)) throw std::domain_error("quadratic match requires T > 0");
    if (!(mu2 > 0.0)) throw std::domain_error("quadratic match requires mu2 > 0");
    QuadraticMatch m;
    m.alpha = b * T / 2.0;
    // beta^2/T - a20 beta - alpha mu2 = 0, positive root.
    const double disc = a20 * a20 * T * T + 4.0 * m.alpha * mu2 * T;
    m.beta = 0.5 * (a20 * T + std::sqrt(disc));
    if (!(m.beta > 0.0)) {
        throw std::domain_error("quadratic match has no positive beta root");
    }
    m.gamma = mu2 / m.beta;
    return m;
}

LinearMatch match_from_linear(double a2, double mu1_shifted, double gamma_assumed,
                              double T) {
    if (!(a2 > 0.0)) throw std::domain_error("linear match requires a2 > 0");
    if (!(gamma_assumed > 0.0 && gamma_assumed < 1.0)) {
        throw std::domain_error("assumed gamma must be in (0,1)");
    }
    if (!(mu1_shifted < 0.0)) {
        throw std::domain_error("linear match requires a negative shifted intercept");
    }
    if (!(T > 0.0)) throw std::domain_error("linear match requires T > 0");
    LinearMatch m;
    m.alpha = a2 / (1.0 - gamma_assumed);
    m.beta = mu1_shifted / (gamma_assumed - 1.0);
    return m;
}

} // namespace cti

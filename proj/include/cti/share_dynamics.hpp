#pragma once

#include <optional>

namespace cti {

/// Parameters of the share growth curve
///   ln((1-p)/p) = (alpha t + beta) (gamma - tanh(t / T)).
/// Time is measured in years since the country-local origin; the lead
/// time delta_t0 between the true start of cashless activity and the
/// earliest data year is carried alongside.
struct ShareCurveParams {
    double alpha = 0.0;          // 1/year
    double beta = 0.0;
    double gamma = 0.0;
    double T_years = 50.0;
    double delta_t0_years = 0.0;

    /// alpha > 0, beta > 0, 0 < gamma < 1, T > 0, delta_t0 >= 0.
    void validate() const;
};

enum class FitModel { Linear, Quadratic };

const char* to_string(FitModel m);

/// Fitted log-odds transform. Linear: y = -a2 t + mu1.
/// Quadratic: y = -(b/2) t^2 - a20 t + mu2. Inactive coefficients are 0.
struct LogisticFit {
    FitModel model = FitModel::Linear;
    double a2 = 0.0;   // 1/year
    double mu1 = 0.0;
    double b = 0.0;    // 1/year^2
    double a20 = 0.0;  // 1/year
    double mu2 = 0.0;
    double r_squared = 0.0;
    int t_origin = 0;  // calendar year of t = 0

    // Coefficient views of the same polynomials, as used by the
    // curve-width formulas: y = k1 t^2 + k2 t + k3 and y = h1 t + h2.
    double k1() const { return -b / 2.0; }
    double k2() const { return -a20; }
    double k3() const { return mu2; }
    double h1() const { return -a2; }
    double h2() const { return mu1; }
};

/// y = ln((1-p)/p); requires 0 < p < 1.
double log_odds(double p);

/// p = 1/(1 + e^y); accepts any finite y and saturates gracefully.
double share_from_log_odds(double y);

/// Evaluates the fitted transform polynomial at t.
double eval_fit(const LogisticFit& fit, double t);

/// The share curve in log-odds space: (alpha t + beta)(gamma - tanh(t/T)).
double y_trial(double t, const ShareCurveParams& params);

/// Cashless share at time t (log-odds inverse of y_trial).
double share_at(double t, const ShareCurveParams& params);

/// Instantaneous logistic growth rate a2(t) = -d/dt y_trial(t):
///   -alpha (gamma - tanh(t/T)) + (alpha t + beta) sech^2(t/T) / T.
double slope_a2(double t, const ShareCurveParams& params);

/// Time of the early maximum of y_trial, i.e. the smallest t > 0 with
/// a2(t) = 0, present only when a2(0) < 0.
std::optional<double> y_extremum_time(const ShareCurveParams& params);

/// Time of the p = 1/2 crossing: T * atanh(gamma).
double half_share_time(const ShareCurveParams& params);

/// Late-time limiting form (gamma - 1)(alpha t + beta).
double asymptote_linear(const ShareCurveParams& params, double t);

/// Early-time limiting form -(alpha/T) t^2 + (alpha gamma - beta/T) t + beta gamma.
double asymptote_quadratic(const ShareCurveParams& params, double t);

/// (gamma - tanh(t/T)) / (gamma - 1): the factor that modulates the
/// late-time asymptote into the full curve.
double modulation_factor(double t, const ShareCurveParams& params);

struct QuadraticMatch {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

/// Recover (alpha, beta, gamma) from quadratic-fit coefficients:
/// alpha = b T / 2, beta = positive root of beta^2/T - a20 beta - alpha mu2 = 0,
/// gamma = mu2 / beta.
QuadraticMatch match_from_quadratic(double b, double a20, double mu2, double T);

struct LinearMatch {
    double alpha = 0.0;
    double beta = 0.0;
};

/// Recover (alpha, beta) from linear-fit coefficients given an assumed gamma:
/// alpha = a2/(1-gamma), beta = mu1_shifted/(gamma-1). mu1_shifted is the
/// intercept re-expressed from the start of cashless activity
/// (mu1' = mu1 - a2 * delta_t0), and must be negative for beta > 0.
LinearMatch match_from_linear(double a2, double mu1_shifted, double gamma_assumed,
                              double T);

} // namespace cti

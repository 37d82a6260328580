#include "cti/calibration.hpp"

#include "cti/ema.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cti {

namespace {

// Least squares for y = c0 + c1 t (+ c2 t^2). Centers t before forming
// the normal equations, then shifts the coefficients back exactly.
struct PolyFit {
    double c[3] = {0.0, 0.0, 0.0};
    double r_squared = 0.0;
};

PolyFit polyfit(const std::vector<double>& t, const std::vector<double>& y, int degree) {
    const int n = static_cast<int>(t.size());
    const int k = degree + 1;
    double mean_t = 0.0;
    for (double v : t) mean_t += v;
    mean_t /= n;

    // normal equations in the centered basis u = t - mean_t
    double s[5] = {0.0, 0.0, 0.0, 0.0, 0.0}; // sums of u^0..u^4
    double r[3] = {0.0, 0.0, 0.0};           // sums of y u^0..u^2
    for (int i = 0; i < n; ++i) {
        const double u = t[i] - mean_t;
        double up = 1.0;
        for (int j = 0; j < 2 * degree + 1; ++j) {
            s[j] += up;
            up *= u;
        }
        up = 1.0;
        for (int j = 0; j < k; ++j) {
            r[j] += y[i] * up;
            up *= u;
        }
    }
    double m[3][4];
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) m[i][j] = s[i + j];
        m[i][k] = r[i];
    }
    // Gaussian elimination with partial pivoting
    for (int col = 0; col < k; ++col) {
        int pivot = col;
        for (int row = col + 1; row < k; ++row) {
            if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
        }
        if (std::abs(m[pivot][col]) < 1e-12 * std::max(1.0, std::abs(s[0]))) {
            throw std::runtime_error("fit_transform: singular design matrix");
        }
        if (pivot != col) {
            for (int j = 0; j <= k; ++j) std::swap(m[col][j], m[pivot][j]);
        }
        for (int row = col + 1; row < k; ++row) {
            const double f = m[row][col] / m[col][col];
            for (int j = col; j <= k; ++j) m[row][j] -= f * m[col][j];
        }
    }
    double cc[3] = {0.0, 0.0, 0.0};
    for (int i = k - 1; i >= 0; --i) {
        double acc = m[i][k];
        for (int j = i + 1; j < k; ++j) acc -= m[i][j] * cc[j];
        cc[i] = acc / m[i][i];
    }

    PolyFit fit;
    // shift back: c0 + c1(t-m) + c2(t-m)^2
    if (degree == 1) {
        fit.c[0] = cc[0] - cc[1] * mean_t;
        fit.c[1] = cc[1];
    } else {
        fit.c[0] = cc[0] - cc[1] * mean_t + cc[2] * mean_t * mean_t;
        fit.c[1] = cc[1] - 2.0 * cc[2] * mean_t;
        fit.c[2] = cc[2];
    }

    double y_mean = 0.0;
    for (double v : y) y_mean += v;
    y_mean /= n;
    double ss_tot = 0.0, ss_res = 0.0;
    for (int i = 0; i < n; ++i) {
        const double pred = fit.c[0] + fit.c[1] * t[i] + fit.c[2] * t[i] * t[i];
        ss_res += (y[i] - pred) * (y[i] - pred);
        ss_tot += (y[i] - y_mean) * (y[i] - y_mean);
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

// Root of k1 t^2 + k2 t + k3 = level on the decreasing branch
// (2 k1 t + k2 < 0). The two roots of a parabola straddle its vertex,
// so exactly one qualifies.
double decreasing_branch_root(double k1, double k2, double k3, double level) {
    const double c = k3 - level;
    const double disc = k2 * k2 - 4.0 * k1 * c;
    if (!(disc >= 0.0)) {
        throw std::runtime_error("curve_width: fitted transform never reaches target level");
    }
    const double sq = std::sqrt(disc);
    const double roots[2] = {(-k2 + sq) / (2.0 * k1), (-k2 - sq) / (2.0 * k1)};
    for (double root : roots) {
        if (2.0 * k1 * root + k2 < 0.0) return root;
    }
    throw std::runtime_error("curve_width: no root on the decreasing branch");
}

} // namespace

LogisticFit fit_transform(const CountrySeries& series, FitModel model) {
    const std::size_t min_points = model == FitModel::Linear ? 3 : 4;
    if (series.observations.size() < min_points) {
        throw std::invalid_argument("fit_transform: need at least " +
                                    std::to_string(min_points) + " observations for a " +
                                    std::string(to_string(model)) + " fit");
    }
    std::vector<double> t, y;
    t.reserve(series.observations.size());
    y.reserve(series.observations.size());
    int prev_year = 0;
    bool first = true;
    for (const auto& obs : series.observations) {
        if (!first && obs.year == prev_year) {
            throw std::runtime_error("fit_transform: duplicate year " +
                                     std::to_string(obs.year));
        }
        prev_year = obs.year;
        first = false;
        t.push_back(static_cast<double>(obs.year - series.t_origin));
        y.push_back(log_odds(obs.share)); // throws on shares outside (0,1)
    }

    const PolyFit pf = polyfit(t, y, model == FitModel::Linear ? 1 : 2);
    LogisticFit fit;
    fit.model = model;
    fit.r_squared = pf.r_squared;
    fit.t_origin = series.t_origin;
    if (model == FitModel::Linear) {
        fit.a2 = -pf.c[1];
        fit.mu1 = pf.c[0];
    } else {
        fit.b = -2.0 * pf.c[2];
        fit.a20 = -pf.c[1];
        fit.mu2 = pf.c[0];
    }
    return fit;
}

FitModel select_model(const LogisticFit& linear, const LogisticFit& quadratic) {
    if (std::abs(quadratic.r_squared - linear.r_squared) < 1e-9) {
        return FitModel::Linear;
    }
    return quadratic.r_squared > linear.r_squared ? FitModel::Quadratic : FitModel::Linear;
}

CurveWidth curve_width(const LogisticFit& fit, double z) {
    const double p_c = calibration_threshold(z);
    CurveWidth w;
    if (fit.model == FitModel::Quadratic) {
        const double level_pc = std::log(1.0 / p_c - 1.0); // ln 2 for z = 4
        w.t1_years = decreasing_branch_root(fit.k1(), fit.k2(), fit.k3(), level_pc);
        w.t2_years = decreasing_branch_root(fit.k1(), fit.k2(), fit.k3(), 0.0);
        w.t_half_years = w.t2_years;
    } else {
        if (!(fit.a2 > 0.0)) {
            throw std::runtime_error("curve_width: linear fit has non-decreasing transform");
        }
        const double level_1mpc = std::log(1.0 / (1.0 - p_c) - 1.0); // -ln 2 for z = 4
        w.t1_years = fit.mu1 / fit.a2;                      // h1 t + h2 = 0
        w.t2_years = (fit.mu1 - level_1mpc) / fit.a2;       // h1 t + h2 = level
        w.t_half_years = w.t1_years;
    }
    if (!(w.t2_years > w.t1_years)) {
        throw std::runtime_error("curve_width: crossings out of order (degenerate series)");
    }
    w.tau_years = 2.0 * (w.t2_years - w.t1_years);
    return w;
}

DeltaT0 delta_t0(const CurveWidth& width) {
    DeltaT0 d;
    const double raw = width.t_half_years < 0.0
                           ? -width.t_half_years + width.tau_years
                           : width.tau_years - width.t_half_years;
    if (raw < 0.0) {
        d.years = 0.0;
        d.clamped = true;
    } else {
        d.years = raw;
    }
    return d;
}

CalibrationReport calibrate_country(const CountrySeries& series, double gamma_assumed,
                                    double T_years, ModelChoice choice, double z) {
    if (!(gamma_assumed > 0.0 && gamma_assumed < 1.0)) {
        throw std::domain_error("assumed gamma must be in (0,1)");
    }
    if (!(T_years > 0.0)) {
        throw std::domain_error("T_years must be > 0");
    }
    CalibrationReport report;
    report.country = series.country;
    report.linear = fit_transform(series, FitModel::Linear);
    report.quadratic = fit_transform(series, FitModel::Quadratic);
    switch (choice) {
    case ModelChoice::Auto: report.selected = select_model(report.linear, report.quadratic); break;
    case ModelChoice::Linear: report.selected = FitModel::Linear; break;
    case ModelChoice::Quadratic: report.selected = FitModel::Quadratic; break;
    }

    ShareCurveParams params;
    params.T_years = T_years;
    if (report.selected == FitModel::Quadratic) {
        report.width = curve_width(report.quadratic, z);
        const QuadraticMatch m = match_from_quadratic(report.quadratic.b, report.quadratic.a20,
                                                      report.quadratic.mu2, T_years);
        params.alpha = m.alpha;
        params.beta = m.beta;
        params.gamma = m.gamma;
        params.delta_t0_years = 0.0;
        if (!(m.gamma > 0.0 && m.gamma < 1.0)) {
            report.warnings.push_back("recovered gamma " + std::to_string(m.gamma) +
                                      " lies outside (0,1)");
        }
    } else {
        report.width = curve_width(report.linear, z);
        const DeltaT0 d = delta_t0(report.width);
        if (d.clamped) {
            report.warnings.push_back("delta_t0 rule went negative; clamped to 0");
        }
        const double mu1_shifted = report.linear.mu1 - report.linear.a2 * d.years;
        const LinearMatch m = match_from_linear(report.linear.a2, mu1_shifted,
                                                gamma_assumed, T_years);
        params.alpha = m.alpha;
        params.beta = m.beta;
        params.gamma = gamma_assumed;
        params.delta_t0_years = d.years;
    }
    report.params = params;
    return report;
}

} // namespace cti

#include "cti/ema.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cti {

void EmaConfig::validate() const {
    if (!(sigma_cash > 0.0)) {
        throw std::domain_error("sigma_cash must be > 0");
    }
    if (!(sigma_cashless > sigma_cash)) {
        throw std::domain_error("sigma_cashless must be > sigma_cash");
    }
    if (!(z > 2.0)) {
        throw std::domain_error("coordination number z must be > 2");
    }
}

const char* to_string(Region r) {
    switch (r) {
    case Region::Inception: return "Inception";
    case Region::Transitioning: return "Transitioning";
    case Region::TippingPoint: return "TippingPoint";
    case Region::NearlyCashless: return "NearlyCashless";
    }
    return "?";
}

namespace {

void check_share(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("share must be in [0,1]");
    }
}

} // namespace

QuadraticCoeffs two_phase_coeffs(double p, const EmaConfig& cfg) {
    const double q = 1.0 - p;
    const double a = cfg.A();
    const double b = -(p * cfg.sigma_cashless * a - p * cfg.sigma_cash +
                       q * cfg.sigma_cash * a - q * cfg.sigma_cashless);
    return {a, b, cfg.C()};
}

double solve_two_phase(double p, const EmaConfig& cfg) {
    cfg.validate();
    check_share(p);
    const QuadraticCoeffs qc = two_phase_coeffs(p, cfg);
    const double root = std::sqrt(qc.discriminant());
    // A > 0, C < 0: exactly one positive root. Pick the evaluation that
    // avoids cancellation between -b and the radical.
    if (qc.b > 0.0) {
        return -2.0 * qc.c / (qc.b + root);
    }
    return (-qc.b + root) / (2.0 * qc.a);
}

double solve_general(const std::vector<MixtureComponent>& components, double z) {
    if (!(z > 2.0)) {
        throw std::domain_error("coordination number z must be > 2");
    }
    if (components.empty()) {
        throw std::domain_error("mixture needs at least one component");
    }
    double fraction_sum = 0.0;
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const auto& c : components) {
        if (!(c.conductivity >= 0.0)) {
            throw std::domain_error("component conductivity must be >= 0");
        }
        if (!(c.fraction >= 0.0 && c.fraction <= 1.0)) {
            throw std::domain_error("component fraction must be in [0,1]");
        }
        fraction_sum += c.fraction;
        if (first) {
            lo = hi = c.conductivity;
            first = false;
        } else {
            lo = std::min(lo, c.conductivity);
            hi = std::max(hi, c.conductivity);
        }
    }
    if (std::abs(fraction_sum - 1.0) > 1e-9) {
        throw std::domain_error("component fractions must sum to 1 (got " +
                                std::to_string(fraction_sum) + ")");
    }
    if (!(hi > 0.0)) {
        throw std::domain_error("at least one component conductivity must be > 0");
    }

    const double shape = z / 2.0 - 1.0;
    auto residual = [&](double s) {
        double r = 0.0;
        for (const auto& c : components) {
            r += c.fraction * (c.conductivity - s) / (c.conductivity + shape * s);
        }
        return r;
    };

    if (lo == hi) {
        return lo; // single conductivity value: the fixed point is exact
    }
    if (lo <= 0.0) {
        lo = 1e-30 * hi; // floor for zero-conductivity components
    }

    // residual is strictly decreasing in s: >= 0 at lo, <= 0 at hi.
    double f_lo = residual(lo);
    if (f_lo <= 0.0) {
        return 0.0; // below the conducting threshold; the solution sits at 0
    }
    double mid = lo;
    for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
        mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break; // interval exhausted at double precision
        }
        const double f = residual(mid);
        if (f > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if (!(std::abs(residual(mid)) < 1e-12)) {
        throw std::runtime_error("solve_general: bisection did not reach residual < 1e-12");
    }
    return mid;
}

double cti_from_share(double p, const EmaConfig& cfg) {
    const double sigma_e = solve_two_phase(p, cfg);
    return 10.0 * std::log10(sigma_e / cfg.sigma_cash) /
           std::log10(cfg.sigma_cashless / cfg.sigma_cash);
}

double share_from_cti(double cti, const EmaConfig& cfg) {
    cfg.validate();
    if (!(cti >= 0.0 && cti <= 10.0)) {
        throw std::domain_error("CTI must be in [0,10]");
    }
    const double sigma_e =
        cfg.sigma_cash * std::pow(cfg.sigma_cashless / cfg.sigma_cash, cti / 10.0);
    // B(p) is linear in p; recover p from B = -(A sigma_e^2 + C) / sigma_e.
    const double a = cfg.A();
    const double neg_b = (a * sigma_e * sigma_e + cfg.C()) / sigma_e;
    return (neg_b - cfg.sigma_cash * a + cfg.sigma_cashless) /
           ((a + 1.0) * cfg.delta_sigma());
}

Region classify(double cti) {
    if (!(cti >= 0.0 && cti <= 10.0)) {
        throw std::domain_error("CTI must be in [0,10]");
    }
    if (cti < 2.5) return Region::Inception;
    if (cti < 5.0) return Region::Transitioning;
    if (cti < 7.5) return Region::TippingPoint;
    return Region::NearlyCashless;
}

double calibration_threshold(double z) {
    if (!(z > 2.0)) {
        throw std::domain_error("coordination number z must be > 2");
    }
    return 1.0 / (z - 1.0);
}

double ema_insulator_threshold(double z) {
    if (!(z > 2.0)) {
        throw std::domain_error("coordination number z must be > 2");
    }
    return 2.0 / z;
}

} // namespace cti

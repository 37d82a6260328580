#include "cti/policy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cti {

void PolicyEvent::validate() const {
    if (epsilon < 0.0) {
        throw std::domain_error("policy epsilon must be >= 0 (only accelerating policies)");
    }
    if (!(omega_years > 0.0)) {
        throw std::domain_error("policy omega must be > 0");
    }
}

Scenario make_scenario(ShareCurveParams baseline, std::vector<PolicyEvent> events,
                       std::string label) {
    baseline.validate();
    for (const auto& e : events) e.validate();
    std::sort(events.begin(), events.end(),
              [](const PolicyEvent& a, const PolicyEvent& b) {
                  return a.t_i_years < b.t_i_years;
              });
    return Scenario{baseline, std::move(events), std::move(label)};
}

double alpha_prime(double t, double baseline_alpha, const std::vector<PolicyEvent>& events) {
    double alpha = baseline_alpha;
    for (const auto& e : events) {
        e.validate();
        alpha += e.epsilon *
                 (1.0 + 2.0 / std::numbers::pi * std::atan((t - e.t_i_years) / e.omega_years));
    }
    return alpha;
}

PolicyPoint project_policy(double t, const Scenario& scenario, const EmaConfig& cfg) {
    ShareCurveParams shifted = scenario.baseline;
    shifted.alpha = alpha_prime(t, scenario.baseline.alpha, scenario.events);
    PolicyPoint pt;
    pt.y = y_trial(t, shifted);
    pt.share = share_from_log_odds(pt.y);
    pt.cti = cti_from_share(pt.share, cfg);
    return pt;
}

std::vector<ScenarioRow> compare_scenarios(const std::vector<Scenario>& scenarios,
                                           const std::vector<double>& t_grid,
                                           const EmaConfig& cfg) {
    if (scenarios.empty()) {
        throw std::invalid_argument("compare_scenarios: no scenarios given");
    }
    const ShareCurveParams& base = scenarios.front().baseline;
    for (const auto& s : scenarios) {
        const ShareCurveParams& p = s.baseline;
        if (p.alpha != base.alpha || p.beta != base.beta || p.gamma != base.gamma ||
            p.T_years != base.T_years || p.delta_t0_years != base.delta_t0_years) {
            throw std::invalid_argument("compare_scenarios: scenarios mix different baselines");
        }
    }
    std::vector<ScenarioRow> rows;
    rows.reserve(scenarios.size() * t_grid.size());
    for (const auto& s : scenarios) {
        for (double t : t_grid) {
            const PolicyPoint pt = project_policy(t, s, cfg);
            ScenarioRow row;
            row.label = s.label;
            row.t_years = t;
            row.y = pt.y;
            row.share = pt.share;
            row.cti = pt.cti;
            row.region = classify(pt.cti);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace cti

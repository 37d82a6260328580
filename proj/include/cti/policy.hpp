#pragma once

#include "cti/ema.hpp"
#include "cti/share_dynamics.hpp"

#include <string>
#include <vector>

namespace cti {

/// One intervention: an arctan ramp of height up to 2*epsilon added to
/// alpha, centered at t_i with width omega. Only accelerating policies
/// (epsilon >= 0) are modeled.
struct PolicyEvent {
    double epsilon = 0.0;      // 1/year
    double t_i_years = 0.0;
    double omega_years = 1.0;

    void validate() const;
};

struct Scenario {
    ShareCurveParams baseline;
    std::vector<PolicyEvent> events; // sorted by t_i_years
    std::string label;
};

/// Validates events and returns a scenario with events sorted by start time.
Scenario make_scenario(ShareCurveParams baseline, std::vector<PolicyEvent> events,
                       std::string label);

/// alpha + sum_i epsilon_i (1 + (2/pi) arctan((t - t_i)/omega_i)).
/// Equals alpha exactly when every epsilon is 0.
double alpha_prime(double t, double baseline_alpha, const std::vector<PolicyEvent>& events);

struct PolicyPoint {
    double y = 0.0;
    double share = 0.0;
    double cti = 0.0;
};

/// Share curve with alpha replaced by alpha_prime(t); bit-identical to the
/// baseline trajectory when no event has effect.
PolicyPoint project_policy(double t, const Scenario& scenario, const EmaConfig& cfg);

struct ScenarioRow {
    std::string label;
    double t_years = 0.0;
    double y = 0.0;
    double share = 0.0;
    double cti = 0.0;
    Region region = Region::Inception;
};

/// Long-format sweep over scenarios sharing one baseline.
std::vector<ScenarioRow> compare_scenarios(const std::vector<Scenario>& scenarios,
                                           const std::vector<double>& t_grid,
                                           const EmaConfig& cfg);

} // namespace cti

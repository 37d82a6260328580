#include "cti/policy.hpp"

#include "country_rows.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace cti;
using cti::testing::row;

namespace {

const EmaConfig kDefault{};

} // namespace

TEST_CASE("policy ramp values") {
    const std::vector<PolicyEvent> one = {{0.2, 15.0, 10.0}};
    const double alpha = 0.325;

    CHECK(alpha_prime(15.0, alpha, one) == doctest::Approx(alpha + 0.2).epsilon(1e-15));
    // far before the start the ramp contributes almost nothing
    CHECK(alpha_prime(15.0 - 100.0 * 10.0, alpha, one) ==
          doctest::Approx(alpha + 0.2 * 0.006365985529816376).epsilon(1e-12));
    // one width past the start: 1 + 2/pi * atan(1) = 1.5
    CHECK(alpha_prime(25.0, alpha, one) == doctest::Approx(alpha + 0.3).epsilon(1e-12));

    CHECK(alpha_prime(12.0, alpha, {}) == alpha);
    const std::vector<PolicyEvent> zero = {{0.0, 15.0, 10.0}};
    CHECK(alpha_prime(12.0, alpha, zero) == alpha); // exactly, not approximately
}

TEST_CASE("policy ramp bounds and monotonicity") {
    const std::vector<PolicyEvent> events = {{0.1, 5.0, 2.0}, {0.25, 20.0, 10.0}};
    const double alpha = 0.16;
    const double cap = alpha + 2.0 * (0.1 + 0.25);
    double prev = -1.0;
    for (double t = -1e6; t <= 1e6; t += 12345.0) {
        const double a = alpha_prime(t, alpha, events);
        CHECK(a >= alpha);
        CHECK(a < cap);
        CHECK(a >= prev);
        prev = a;
    }
}

TEST_CASE("event validation") {
    CHECK_THROWS_AS((PolicyEvent{-0.1, 10.0, 5.0}.validate()), std::domain_error);
    CHECK_THROWS_AS((PolicyEvent{0.1, 10.0, 0.0}.validate()), std::domain_error);
    CHECK_NOTHROW((PolicyEvent{0.0, 10.0, 5.0}.validate()));
    CHECK_THROWS_AS(make_scenario(row("Japan"), {{-0.1, 10.0, 5.0}}, "bad"),
                    std::domain_error);

    // events come back sorted by start time
    const Scenario s = make_scenario(row("Japan"), {{0.1, 20.0, 5.0}, {0.2, 10.0, 5.0}}, "x");
    CHECK(s.events[0].t_i_years == 10.0);
    CHECK(s.events[1].t_i_years == 20.0);
}

TEST_CASE("zero-impact scenarios reproduce the baseline bit for bit") {
    const auto& japan = row("Japan");
    const Scenario none = make_scenario(japan, {}, "none");
    const Scenario zero = make_scenario(japan, {{0.0, 15.0, 10.0}}, "zero");
    for (double t = 0.0; t <= 60.0; t += 0.5) {
        const PolicyPoint a = project_policy(t, none, kDefault);
        const PolicyPoint b = project_policy(t, zero, kDefault);
        CHECK(a.y == y_trial(t, japan));
        CHECK(b.y == y_trial(t, japan));
        CHECK(a.share == share_at(t, japan));
        CHECK(a.cti == cti_from_share(share_at(t, japan), kDefault));
    }
}

TEST_CASE("pinned policy projection for the Japan parameters") {
    const Scenario s = make_scenario(row("Japan"), {{0.2, 15.0, 10.0}}, "eps=0.2");
    const double a = alpha_prime(30.0, 0.325, s.events);
    CHECK(a == doctest::Approx(0.650133183).epsilon(1e-9));
    const PolicyPoint pt = project_policy(30.0, s, kDefault);
    CHECK(pt.y == doctest::Approx(-7.023165498).epsilon(1e-8));
}

TEST_CASE("stronger policies raise the index past the crossover") {
    const auto& japan = row("Japan");
    const double crossover = half_share_time(japan);
    const Scenario s0 = make_scenario(japan, {}, "0");
    const Scenario s1 = make_scenario(japan, {{0.1, 15.0, 10.0}}, "0.1");
    const Scenario s2 = make_scenario(japan, {{0.2, 15.0, 10.0}}, "0.2");
    for (double t = 16.0; t <= 40.0; t += 1.0) {
        CHECK(t > crossover);
        const PolicyPoint p0 = project_policy(t, s0, kDefault);
        const PolicyPoint p1 = project_policy(t, s1, kDefault);
        const PolicyPoint p2 = project_policy(t, s2, kDefault);
        CHECK(p0.y >= p1.y);
        CHECK(p1.y >= p2.y);
        CHECK(p2.cti > p1.cti);
        CHECK(p1.cti > p0.cti);
    }
}

TEST_CASE("scenario sweep produces a consistent long table") {
    const auto& japan = row("Japan");
    std::vector<Scenario> scenarios = {make_scenario(japan, {}, "0"),
                                       make_scenario(japan, {{0.1, 15.0, 10.0}}, "0.1"),
                                       make_scenario(japan, {{0.2, 15.0, 10.0}}, "0.2")};
    std::vector<double> grid;
    for (int t = 0; t <= 40; ++t) grid.push_back(t);
    const auto rows = compare_scenarios(scenarios, grid, kDefault);
    REQUIRE(rows.size() == 3 * 41);
    for (const auto& r : rows) {
        CHECK(r.region == classify(r.cti));
        CHECK(r.share == share_from_log_odds(r.y));
    }
    // index ordering at t = 30 across the three scenarios
    const double c0 = rows[30].cti, c1 = rows[41 + 30].cti, c2 = rows[2 * 41 + 30].cti;
    CHECK(c2 > c1);
    CHECK(c1 > c0);

    auto other = make_scenario(row("Hungary"), {}, "other");
    scenarios.push_back(other);
    CHECK_THROWS_AS(compare_scenarios(scenarios, grid, kDefault), std::invalid_argument);
    CHECK_THROWS_AS(compare_scenarios({}, grid, kDefault), std::invalid_argument);
}

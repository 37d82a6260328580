#include "cti/rate.hpp"

#include "country_rows.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace cti;
using cti::testing::kCountryRows;
using cti::testing::row;

namespace {

const EmaConfig kDefault{};

double cti_of_t(double t, const ShareCurveParams& params) {
    return cti_from_share(share_at(t, params), kDefault);
}

} // namespace

TEST_CASE("conductivity derivative matches a central difference") {
    const double h = 1e-6;
    for (double p : {0.05, 1.0 / 3.0, 0.5, 0.8, 0.99}) {
        const double fd =
            (solve_two_phase(p + h, kDefault) - solve_two_phase(p - h, kDefault)) / (2.0 * h);
        const double analytic = dsigma_dp(p, kDefault);
        CHECK(analytic > 0.0);
        CHECK(std::abs(analytic - fd) <= 1e-6 * std::abs(analytic));
    }
    CHECK_THROWS_AS(dsigma_dp(0.0, kDefault), std::domain_error);
    CHECK_THROWS_AS(dsigma_dp(1.0, kDefault), std::domain_error);
    // equal conductivities are rejected by the config invariant already
    CHECK_THROWS_AS(dsigma_dp(0.5, EmaConfig{5.0, 5.0, 4.0}), std::domain_error);
}

TEST_CASE("time derivative factorizes through the chain rule") {
    for (const char* name : {"Hungary", "Japan", "UK"}) {
        const auto& params = row(name);
        for (double t = 0.0; t <= 100.0; t += 0.7) {
            const double p = share_at(t, params);
            if (!(p > 0.0 && p < 1.0)) continue;
            const double direct = dsigma_dt(t, params, kDefault);
            const double chained =
                dsigma_dp(p, kDefault) * slope_a2(t, params) * p * (1.0 - p);
            CHECK(std::abs(direct - chained) <=
                  1e-9 * std::max(std::abs(direct), 1e-300));
        }
    }

    // the growth factor vanishes where the transform peaks
    const auto& nl = row("Netherland");
    const double t_star = 0.7185060;
    CHECK(std::abs(dsigma_dt(t_star, nl, kDefault)) < 1e-6);

    // and saturation kills the rate entirely
    CHECK(std::abs(dsigma_dt(10.0 * nl.T_years, nl, kDefault)) < 1e-6);
}

TEST_CASE("index growth rate agrees with finite differences of the index") {
    const double h = 1e-4;
    for (const char* name : {"Hungary", "Japan", "UK"}) {
        const auto& params = row(name);
        for (double t = h; t <= 100.0; t += 0.5) {
            const double analytic = dcti_dt(t, params, kDefault);
            const double fd = (cti_of_t(t + h, params) - cti_of_t(t - h, params)) / (2.0 * h);
            // double precision floors the comparison near the saturated tail
            CHECK(std::abs(analytic - fd) <= std::max(1e-5 * std::abs(analytic), 1e-10));
        }
    }
    // spot checks away from the tail at the named times
    for (double t : {5.0, 15.0, 25.0}) {
        const auto& params = row("Hungary");
        const double analytic = dcti_dt(t, params, kDefault);
        const double fd = (cti_of_t(t + h, params) - cti_of_t(t - h, params)) / (2.0 * h);
        CHECK(std::abs(analytic - fd) <= 1e-5 * std::abs(analytic));
    }
}

TEST_CASE("rate sign follows the transform slope") {
    for (const auto& r : kCountryRows) {
        for (double t = 0.0; t <= 120.0; t += 0.9) {
            const double a2 = slope_a2(t, r.params);
            const double rate = dcti_dt(t, r.params, kDefault);
            if (a2 > 0.0) {
                CHECK(rate >= 0.0);
            } else if (a2 < 0.0) {
                CHECK(rate <= 0.0);
            }
        }
    }
}

TEST_CASE("rate rises to a single interior maximum then decays") {
    for (const auto& r : kCountryRows) {
        std::vector<double> grid;
        for (double t = 0.0; t <= 120.0; t += 0.5) grid.push_back(t);
        const auto profile = rate_profile(r.params, kDefault, grid);
        std::size_t peak = 0;
        for (std::size_t i = 1; i < profile.size(); ++i) {
            if (profile[i].dcti_dt > profile[peak].dcti_dt) peak = i;
        }
        CHECK(peak > 0);
        CHECK(peak < profile.size() - 1);
        for (std::size_t i = 0; i + 1 <= peak; ++i) {
            CHECK(profile[i + 1].dcti_dt >= profile[i].dcti_dt - 1e-12);
        }
        for (std::size_t i = peak; i + 1 < profile.size(); ++i) {
            CHECK(profile[i + 1].dcti_dt <= profile[i].dcti_dt + 1e-12);
        }
        // near-zero rate once the share saturates
        CHECK(std::abs(dcti_dt(10.0 * r.params.T_years, r.params, kDefault)) < 1e-4);
    }
}

TEST_CASE("rate profile carries all per-sample quantities") {
    std::vector<double> grid;
    for (int i = 0; i <= 60; ++i) grid.push_back(i);
    const auto profile = rate_profile(row("Hungary"), kDefault, grid);
    REQUIRE(profile.size() == 61);
    for (const auto& s : profile) {
        CHECK(std::isfinite(s.share));
        CHECK(std::isfinite(s.sigma_e));
        CHECK(std::isfinite(s.dsigma_dt));
        CHECK(std::isfinite(s.dcti_dt));
        CHECK(s.sigma_e >= kDefault.sigma_cash);
        CHECK(s.sigma_e <= kDefault.sigma_cashless);
    }
    CHECK(rate_profile(row("Hungary"), kDefault, {}).empty());
}

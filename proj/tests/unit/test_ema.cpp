#include "cti/ema.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace cti;

namespace {

const EmaConfig kDefault{};

double quadratic_residual(double sigma_e, double p, const EmaConfig& cfg) {
    const QuadraticCoeffs qc = two_phase_coeffs(p, cfg);
    return qc.a * sigma_e * sigma_e + qc.b * sigma_e + qc.c;
}

} // namespace

TEST_CASE("two-phase solver hits the hand-derived roots") {
    CHECK(solve_two_phase(0.0, kDefault) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(solve_two_phase(1.0, kDefault) == doctest::Approx(10.0).epsilon(1e-12));
    // p = 1/3: B = 3, discriminant 49, root (-3 + 7)/2 = 2 exactly
    CHECK(std::abs(solve_two_phase(1.0 / 3.0, kDefault) - 2.0) < 1e-12);
    // p = 1/2: B = 0, root sqrt(10)
    CHECK(std::abs(solve_two_phase(0.5, kDefault) - std::sqrt(10.0)) < 1e-12);
}

TEST_CASE("two-phase solver rejects bad input") {
    CHECK_THROWS_AS(solve_two_phase(-0.01, kDefault), std::domain_error);
    CHECK_THROWS_AS(solve_two_phase(1.01, kDefault), std::domain_error);
    CHECK_THROWS_AS(solve_two_phase(0.5, EmaConfig{10.0, 1.0, 4.0}), std::domain_error);
    CHECK_THROWS_AS(solve_two_phase(0.5, EmaConfig{5.0, 5.0, 4.0}), std::domain_error);
    CHECK_THROWS_AS(solve_two_phase(0.5, EmaConfig{1.0, 10.0, 2.0}), std::domain_error);
    CHECK_THROWS_AS(solve_two_phase(0.5, EmaConfig{0.0, 10.0, 4.0}), std::domain_error);
}

TEST_CASE("two-phase solution stays within bounds and is strictly monotone") {
    double prev = solve_two_phase(0.0, kDefault);
    for (int i = 1; i <= 1000; ++i) {
        const double p = i / 1000.0;
        const double s = solve_two_phase(p, kDefault);
        CHECK(s >= kDefault.sigma_cash);
        CHECK(s <= kDefault.sigma_cashless);
        CHECK(s > prev);
        prev = s;
    }
}

TEST_CASE("returned root satisfies the quadratic to 1e-10 relative") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double sigma_cash = 0.05 + 5.0 * u(rng);
        const EmaConfig cfg{sigma_cash, sigma_cash * (1.5 + 30.0 * u(rng)), 2.2 + 6.0 * u(rng)};
        const double p = u(rng);
        const double s = solve_two_phase(p, cfg);
        const QuadraticCoeffs qc = two_phase_coeffs(p, cfg);
        const double scale = qc.a * s * s + std::abs(qc.b) * s + std::abs(qc.c);
        CHECK(std::abs(quadratic_residual(s, p, cfg)) <= 1e-10 * scale);
    }
}

TEST_CASE("general solver: identities and residual") {
    CHECK(solve_general({{5.0, 1.0}}, 4.0) == 5.0);

    const double two_phase = solve_two_phase(1.0 / 3.0, kDefault);
    const double general = solve_general({{1.0, 2.0 / 3.0}, {10.0, 1.0 / 3.0}}, 4.0);
    CHECK(std::abs(general - two_phase) < 1e-9);

    const std::vector<MixtureComponent> parts = {{1.0, 0.25}, {4.0, 0.25}, {10.0, 0.5}};
    const double s = solve_general(parts, 4.0);
    double residual = 0.0;
    for (const auto& c : parts) {
        residual += c.fraction * (c.conductivity - s) / (c.conductivity + 1.0 * s);
    }
    CHECK(std::abs(residual) < 1e-12);
}

TEST_CASE("general solver rejects bad mixtures") {
    CHECK_THROWS_AS(solve_general({}, 4.0), std::domain_error);
    CHECK_THROWS_AS(solve_general({{1.0, 0.5}, {10.0, 0.4}}, 4.0), std::domain_error);
    CHECK_THROWS_AS(solve_general({{-1.0, 1.0}}, 4.0), std::domain_error);
    CHECK_THROWS_AS(solve_general({{0.0, 1.0}}, 4.0), std::domain_error);
    CHECK_THROWS_AS(solve_general({{1.0, 0.5}, {10.0, 0.5}}, 2.0), std::domain_error);
}

TEST_CASE("general solver agrees with the two-phase closed form on random configs") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double sigma_cash = 0.05 + 5.0 * u(rng);
        const EmaConfig cfg{sigma_cash, sigma_cash * (1.5 + 48.5 * u(rng)), 2.2 + 5.8 * u(rng)};
        const double p = u(rng);
        const double a = solve_two_phase(p, cfg);
        const double b =
            solve_general({{cfg.sigma_cash, 1.0 - p}, {cfg.sigma_cashless, p}}, cfg.z);
        CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, a));
    }
}

TEST_CASE("index endpoints and the exact interior checkpoint") {
    CHECK(std::abs(cti_from_share(0.0, kDefault)) < 1e-12);
    CHECK(std::abs(cti_from_share(1.0, kDefault) - 10.0) < 1e-12);
    CHECK(cti_from_share(1.0 / 3.0, kDefault) ==
          doctest::Approx(10.0 * std::log10(2.0)).epsilon(1e-12));
}

TEST_CASE("generalized index keeps its endpoints for sigma_cash != 1") {
    const EmaConfig cfg{2.0, 50.0, 4.0};
    CHECK(std::abs(cti_from_share(0.0, cfg)) < 1e-12);
    CHECK(std::abs(cti_from_share(1.0, cfg) - 10.0) < 1e-12);
    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
        const double v = cti_from_share(i / 100.0, cfg);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("share_from_cti inverts the index") {
    CHECK(share_from_cti(2.5, kDefault) == doctest::Approx(0.2863814532).epsilon(1e-8));
    CHECK(std::abs(share_from_cti(2.5, kDefault) - 0.2864) < 5e-4);
    CHECK(share_from_cti(7.5, kDefault) == doctest::Approx(0.7136185468).epsilon(1e-8));
    CHECK(std::abs(share_from_cti(7.5, kDefault) - 0.7136) < 5e-4);
    CHECK(std::abs(share_from_cti(5.0, kDefault) - 0.5) < 1e-9);
    CHECK_THROWS_AS(share_from_cti(-0.1, kDefault), std::domain_error);
    CHECK_THROWS_AS(share_from_cti(10.1, kDefault), std::domain_error);
}

TEST_CASE("index round trips through its inverse") {
    for (int i = 0; i <= 200; ++i) {
        const double p = i / 200.0;
        CHECK(std::abs(share_from_cti(cti_from_share(p, kDefault), kDefault) - p) < 1e-9);
    }
    for (int i = 0; i <= 200; ++i) {
        const double v = 10.0 * i / 200.0;
        CHECK(std::abs(cti_from_share(share_from_cti(v, kDefault), kDefault) - v) < 1e-9);
    }
}

TEST_CASE("region classification uses half-open bands") {
    CHECK(classify(0.0) == Region::Inception);
    CHECK(classify(2.4999) == Region::Inception);
    CHECK(classify(2.5) == Region::Transitioning);
    CHECK(classify(2.6) == Region::Transitioning); // Japan's 2020 value
    CHECK(classify(4.999) == Region::Transitioning);
    CHECK(classify(5.0) == Region::TippingPoint);
    CHECK(classify(7.5) == Region::NearlyCashless);
    CHECK(classify(10.0) == Region::NearlyCashless);
    CHECK_THROWS_AS(classify(-0.001), std::domain_error);
    CHECK_THROWS_AS(classify(10.001), std::domain_error);
    CHECK(Region::Inception < Region::Transitioning);
    CHECK(Region::Transitioning < Region::TippingPoint);
    CHECK(Region::TippingPoint < Region::NearlyCashless);
}

TEST_CASE("thresholds") {
    CHECK(calibration_threshold(4.0) == 1.0 / 3.0);
    CHECK(calibration_threshold(6.0) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(calibration_threshold(3.0) == 0.5);
    CHECK_THROWS_AS(calibration_threshold(2.0), std::domain_error);

    CHECK(ema_insulator_threshold(4.0) == 0.5);
    CHECK(ema_insulator_threshold(6.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(ema_insulator_threshold(2.0), std::domain_error);

    // with a nearly insulating cash phase the solution leaves ~0 at p = 2/z
    const double s = solve_two_phase(0.55, EmaConfig{1e-12, 10.0, 4.0});
    CHECK(s == doctest::Approx(10.0 * (2.0 * 0.55 - 1.0)).epsilon(1e-9));
}

TEST_CASE("insulator limit splits cleanly around the threshold") {
    const EmaConfig cfg{1e-12 * 10.0, 10.0, 4.0};
    CHECK(solve_two_phase(0.45, cfg) < 1e-6 * cfg.sigma_cashless);
    CHECK(solve_two_phase(0.55, cfg) >= 0.09 * cfg.sigma_cashless);
}

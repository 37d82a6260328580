#pragma once

#include "cti/ema.hpp"

#include <string>
#include <vector>

namespace cti {

struct Observation {
    int year = 0;
    double share = 0.0; // fraction in (0,1)
};

/// Annual cashless-share observations for one country. Years are strictly
/// increasing; t for fitting is measured from t_origin (the earliest year).
struct CountrySeries {
    std::string country;
    std::vector<Observation> observations;
    int t_origin = 0;

    void validate() const;
};

/// Builds a validated series: sorts by year, sets t_origin, rejects
/// duplicate years and shares outside (0,1).
CountrySeries make_series(std::string country, std::vector<Observation> observations);

enum class ShareUnit { Fraction, Percent };

/// Run-wide defaults shared by the CLI subcommands.
struct RunConfig {
    double sigma_cash = 1.0;
    double sigma_cashless = 10.0;
    double z = 4.0;
    double T_years = 50.0;
    double gamma_default = 0.3;
    ShareUnit share_unit = ShareUnit::Fraction;

    EmaConfig ema() const { return {sigma_cash, sigma_cashless, z}; }
    void validate() const;
};

} // namespace cti

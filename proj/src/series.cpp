#include "cti/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cti {

void CountrySeries::validate() const {
    if (country.empty()) {
        throw std::domain_error("series has an empty country name");
    }
    if (observations.empty()) {
        throw std::domain_error("series '" + country + "' has no observations");
    }
    if (t_origin != observations.front().year) {
        throw std::domain_error("series '" + country + "': t_origin must be the earliest year");
    }
    int prev = observations.front().year - 1;
    for (const auto& obs : observations) {
        if (obs.year <= prev) {
            throw std::domain_error("series '" + country + "': duplicate or unsorted year " +
                                    std::to_string(obs.year));
        }
        prev = obs.year;
        if (!(obs.share > 0.0 && obs.share < 1.0)) {
            throw std::domain_error("series '" + country + "', year " +
                                    std::to_string(obs.year) +
                                    ": share must be strictly inside (0,1)");
        }
    }
}

CountrySeries make_series(std::string country, std::vector<Observation> observations) {
    CountrySeries s;
    s.country = std::move(country);
    s.observations = std::move(observations);
    std::sort(s.observations.begin(), s.observations.end(),
              [](const Observation& a, const Observation& b) { return a.year < b.year; });
    if (!s.observations.empty()) {
        s.t_origin = s.observations.front().year;
    }
    s.validate();
    return s;
}

void RunConfig::validate() const {
    ema().validate();
    if (!(T_years > 0.0)) throw std::domain_error("T_years must be > 0");
    if (!(gamma_default > 0.0 && gamma_default < 1.0)) {
        throw std::domain_error("gamma_default must be in (0,1)");
    }
}

} // namespace cti

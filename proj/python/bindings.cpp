#include "cti/calibration.hpp"
#include "cti/io.hpp"
#include "cti/policy.hpp"
#include "cti/rate.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace cti;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cashless transaction index: effective-medium index, share-curve "
              "calibration, growth rates and policy scenarios.";

    py::enum_<Region>(m, "Region")
        .value("Inception", Region::Inception)
        .value("Transitioning", Region::Transitioning)
        .value("TippingPoint", Region::TippingPoint)
        .value("NearlyCashless", Region::NearlyCashless);

    py::class_<EmaConfig>(m, "EmaConfig")
        .def(py::init([](double sigma_cash, double sigma_cashless, double z) {
                 EmaConfig cfg{sigma_cash, sigma_cashless, z};
                 cfg.validate();
                 return cfg;
             }),
             py::arg("sigma_cash") = 1.0, py::arg("sigma_cashless") = 10.0, py::arg("z") = 4.0)
        .def_readonly("sigma_cash", &EmaConfig::sigma_cash)
        .def_readonly("sigma_cashless", &EmaConfig::sigma_cashless)
        .def_readonly("z", &EmaConfig::z)
        .def("__repr__", [](const EmaConfig& c) {
            return "EmaConfig(sigma_cash=" + format_number(c.sigma_cash) +
                   ", sigma_cashless=" + format_number(c.sigma_cashless) +
                   ", z=" + format_number(c.z) + ")";
        });

    m.def("solve_two_phase", &solve_two_phase, py::arg("p"), py::arg("cfg") = EmaConfig{},
          "Effective conductivity of the two-phase mixture at cashless share p.");
    m.def(
        "solve_general",
        [](const std::vector<std::pair<double, double>>& components, double z) {
            std::vector<MixtureComponent> parts;
            parts.reserve(components.size());
            for (const auto& [sigma, fraction] : components) {
                parts.push_back({sigma, fraction});
            }
            return solve_general(parts, z);
        },
        py::arg("components"), py::arg("z") = 4.0,
        "Effective conductivity of [(conductivity, fraction), ...] mixtures.");
    m.def("cti_from_share", &cti_from_share, py::arg("p"), py::arg("cfg") = EmaConfig{});
    m.def("share_from_cti", &share_from_cti, py::arg("cti"), py::arg("cfg") = EmaConfig{});
    m.def("classify", &classify, py::arg("cti"));
    m.def("calibration_threshold", &calibration_threshold, py::arg("z") = 4.0);
    m.def("ema_insulator_threshold", &ema_insulator_threshold, py::arg("z") = 4.0);

    py::class_<ShareCurveParams>(m, "ShareCurveParams")
        .def(py::init([](double alpha, double beta, double gamma, double T_years,
                         double delta_t0_years) {
                 ShareCurveParams p{alpha, beta, gamma, T_years, delta_t0_years};
                 p.validate();
                 return p;
             }),
             py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("T_years") = 50.0,
             py::arg("delta_t0_years") = 0.0)
        .def_readonly("alpha", &ShareCurveParams::alpha)
        .def_readonly("beta", &ShareCurveParams::beta)
        .def_readonly("gamma", &ShareCurveParams::gamma)
        .def_readonly("T_years", &ShareCurveParams::T_years)
        .def_readonly("delta_t0_years", &ShareCurveParams::delta_t0_years)
        .def("__repr__", [](const ShareCurveParams& p) {
            return "ShareCurveParams(alpha=" + format_number(p.alpha) +
                   ", beta=" + format_number(p.beta) + ", gamma=" + format_number(p.gamma) +
                   ", T_years=" + format_number(p.T_years) +
                   ", delta_t0_years=" + format_number(p.delta_t0_years) + ")";
        });

    m.def("log_odds", &log_odds, py::arg("p"));
    m.def("share_from_log_odds", &share_from_log_odds, py::arg("y"));
    m.def("y_trial", &y_trial, py::arg("t"), py::arg("params"));
    m.def("share_at", &share_at, py::arg("t"), py::arg("params"));
    m.def("slope_a2", &slope_a2, py::arg("t"), py::arg("params"));
    m.def("y_extremum_time", &y_extremum_time, py::arg("params"));
    m.def("half_share_time", &half_share_time, py::arg("params"));
    m.def("asymptote_linear", &asymptote_linear, py::arg("params"), py::arg("t"));
    m.def("asymptote_quadratic", &asymptote_quadratic, py::arg("params"), py::arg("t"));
    m.def("modulation_factor", &modulation_factor, py::arg("t"), py::arg("params"));
    m.def(
        "match_from_quadratic",
        [](double b, double a20, double mu2, double T) {
            const QuadraticMatch q = match_from_quadratic(b, a20, mu2, T);
            return py::make_tuple(q.alpha, q.beta, q.gamma);
        },
        py::arg("b"), py::arg("a20"), py::arg("mu2"), py::arg("T") = 50.0);
    m.def(
        "match_from_linear",
        [](double a2, double mu1_shifted, double gamma_assumed, double T) {
            const LinearMatch l = match_from_linear(a2, mu1_shifted, gamma_assumed, T);
            return py::make_tuple(l.alpha, l.beta);
        },
        py::arg("a2"), py::arg("mu1_shifted"), py::arg("gamma_assumed"), py::arg("T") = 50.0);

    py::enum_<FitModel>(m, "FitModel")
        .value("Linear", FitModel::Linear)
        .value("Quadratic", FitModel::Quadratic);
    py::enum_<ModelChoice>(m, "ModelChoice")
        .value("Auto", ModelChoice::Auto)
        .value("Linear", ModelChoice::Linear)
        .value("Quadratic", ModelChoice::Quadratic);

    py::class_<LogisticFit>(m, "LogisticFit")
        .def_readonly("model", &LogisticFit::model)
        .def_readonly("a2", &LogisticFit::a2)
        .def_readonly("mu1", &LogisticFit::mu1)
        .def_readonly("b", &LogisticFit::b)
        .def_readonly("a20", &LogisticFit::a20)
        .def_readonly("mu2", &LogisticFit::mu2)
        .def_readonly("r_squared", &LogisticFit::r_squared)
        .def_readonly("t_origin", &LogisticFit::t_origin);

    py::class_<CurveWidth>(m, "CurveWidth")
        .def_readonly("tau_years", &CurveWidth::tau_years)
        .def_readonly("t_half_years", &CurveWidth::t_half_years)
        .def_readonly("t1_years", &CurveWidth::t1_years)
        .def_readonly("t2_years", &CurveWidth::t2_years);

    py::class_<CountrySeries>(m, "CountrySeries")
        .def(py::init([](std::string country, const std::vector<int>& years,
                         const std::vector<double>& shares) {
                 if (years.size() != shares.size()) {
                     throw std::invalid_argument("years and shares differ in length");
                 }
                 std::vector<Observation> obs;
                 obs.reserve(years.size());
                 for (std::size_t i = 0; i < years.size(); ++i) {
                     obs.push_back({years[i], shares[i]});
                 }
                 return make_series(std::move(country), std::move(obs));
             }),
             py::arg("country"), py::arg("years"), py::arg("shares"))
        .def_readonly("country", &CountrySeries::country)
        .def_readonly("t_origin", &CountrySeries::t_origin)
        .def_property_readonly("years",
                               [](const CountrySeries& s) {
                                   std::vector<int> years;
                                   for (const auto& o : s.observations) years.push_back(o.year);
                                   return years;
                               })
        .def_property_readonly("shares", [](const CountrySeries& s) {
            std::vector<double> shares;
            for (const auto& o : s.observations) shares.push_back(o.share);
            return shares;
        });

    py::class_<CalibrationReport>(m, "CalibrationReport")
        .def_readonly("country", &CalibrationReport::country)
        .def_readonly("linear", &CalibrationReport::linear)
        .def_readonly("quadratic", &CalibrationReport::quadratic)
        .def_readonly("selected", &CalibrationReport::selected)
        .def_readonly("params", &CalibrationReport::params)
        .def_readonly("width", &CalibrationReport::width)
        .def_readonly("warnings", &CalibrationReport::warnings);

    m.def("fit_transform", &fit_transform, py::arg("series"), py::arg("model"));
    m.def("select_model", &select_model, py::arg("linear"), py::arg("quadratic"));
    m.def("curve_width", &curve_width, py::arg("fit"), py::arg("z") = 4.0);
    m.def(
        "delta_t0",
        [](const CurveWidth& w) {
            const DeltaT0 d = delta_t0(w);
            return py::make_tuple(d.years, d.clamped);
        },
        py::arg("width"), "Returns (delta_t0_years, clamped).");
    m.def("calibrate_country", &calibrate_country, py::arg("series"), py::arg("gamma_assumed"),
          py::arg("T_years") = 50.0, py::arg("model") = ModelChoice::Auto, py::arg("z") = 4.0);

    py::class_<RateSample>(m, "RateSample")
        .def_readonly("t_years", &RateSample::t_years)
        .def_readonly("share", &RateSample::share)
        .def_readonly("sigma_e", &RateSample::sigma_e)
        .def_readonly("dsigma_dt", &RateSample::dsigma_dt)
        .def_readonly("dcti_dt", &RateSample::dcti_dt);

    m.def("dsigma_dp", &dsigma_dp, py::arg("p"), py::arg("cfg") = EmaConfig{});
    m.def("dsigma_dt", &dsigma_dt, py::arg("t"), py::arg("params"), py::arg("cfg") = EmaConfig{});
    m.def("dcti_dt", &dcti_dt, py::arg("t"), py::arg("params"), py::arg("cfg") = EmaConfig{});
    m.def("rate_profile", &rate_profile, py::arg("params"), py::arg("cfg"), py::arg("t_grid"));

    py::class_<PolicyEvent>(m, "PolicyEvent")
        .def(py::init([](double epsilon, double t_i_years, double omega_years) {
                 PolicyEvent e{epsilon, t_i_years, omega_years};
                 e.validate();
                 return e;
             }),
             py::arg("epsilon"), py::arg("t_i_years"), py::arg("omega_years"))
        .def_readonly("epsilon", &PolicyEvent::epsilon)
        .def_readonly("t_i_years", &PolicyEvent::t_i_years)
        .def_readonly("omega_years", &PolicyEvent::omega_years);

    py::class_<Scenario>(m, "Scenario")
        .def_readonly("baseline", &Scenario::baseline)
        .def_readonly("events", &Scenario::events)
        .def_readonly("label", &Scenario::label);

    py::class_<PolicyPoint>(m, "PolicyPoint")
        .def_readonly("y", &PolicyPoint::y)
        .def_readonly("share", &PolicyPoint::share)
        .def_readonly("cti", &PolicyPoint::cti);

    py::class_<ScenarioRow>(m, "ScenarioRow")
        .def_readonly("label", &ScenarioRow::label)
        .def_readonly("t_years", &ScenarioRow::t_years)
        .def_readonly("y", &ScenarioRow::y)
        .def_readonly("share", &ScenarioRow::share)
        .def_readonly("cti", &ScenarioRow::cti)
        .def_readonly("region", &ScenarioRow::region);

    m.def("make_scenario", &make_scenario, py::arg("baseline"), py::arg("events"),
          py::arg("label"));
    m.def("alpha_prime", &alpha_prime, py::arg("t"), py::arg("baseline_alpha"),
          py::arg("events"));
    m.def("project_policy", &project_policy, py::arg("t"), py::arg("scenario"),
          py::arg("cfg") = EmaConfig{});
    m.def("compare_scenarios", &compare_scenarios, py::arg("scenarios"), py::arg("t_grid"),
          py::arg("cfg") = EmaConfig{});

    py::enum_<ShareUnit>(m, "ShareUnit")
        .value("Fraction", ShareUnit::Fraction)
        .value("Percent", ShareUnit::Percent);
    m.def("load_series_file", &load_series_file, py::arg("path"),
          py::arg("unit") = ShareUnit::Fraction);

    m.attr("__version__") = "0.1.0";
}

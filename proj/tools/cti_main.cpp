#include "cti/calibration.hpp"
#include "cti/io.hpp"
#include "cti/policy.hpp"
#include "cti/rate.hpp"
#include "cti/svg_plot.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct GridFlags {
    double from = 0.0;
    double to = 60.0;
    double step = 1.0;
};

void add_grid_flags(CLI::App* cmd, GridFlags& grid) {
    cmd->add_option("--from", grid.from, "First grid time in years")->capture_default_str();
    cmd->add_option("--to", grid.to, "Last grid time in years")->capture_default_str();
    cmd->add_option("--step", grid.step, "Grid step in years")->capture_default_str();
}

std::vector<double> build_grid(const GridFlags& g) {
    if (!(g.step > 0.0)) {
        throw std::domain_error("--step must be > 0");
    }
    if (g.to < g.from) {
        throw std::domain_error("--to must be >= --from");
    }
    const auto count = static_cast<std::size_t>(std::floor((g.to - g.from) / g.step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid.push_back(g.from + static_cast<double>(i) * g.step);
    }
    return grid;
}

cti::ModelChoice parse_model(const std::string& name) {
    if (name == "linear") return cti::ModelChoice::Linear;
    if (name == "quadratic") return cti::ModelChoice::Quadratic;
    return cti::ModelChoice::Auto;
}

std::string sanitize(const std::string& name) {
    std::string out;
    for (char c : name) {
        out += (std::isalnum(static_cast<unsigned char>(c)) != 0) ? c : '_';
    }
    return out;
}

const cti::CountrySeries& find_country(const std::vector<cti::CountrySeries>& all,
                                       const std::string& name) {
    for (const auto& s : all) {
        if (s.country == name) return s;
    }
    throw std::domain_error("country '" + name + "' not present in the input");
}

void print_report_summary(const cti::CalibrationReport& report) {
    std::printf("country %s\n", report.country.c_str());
    std::printf("selected %s\n", cti::to_string(report.selected));
    std::printf("R2 linear %s quadratic %s\n",
                cti::format_number(report.linear.r_squared).c_str(),
                cti::format_number(report.quadratic.r_squared).c_str());
    std::printf("alpha %s beta %s gamma %s T %s delta_t0 %s\n",
                cti::format_number(report.params.alpha).c_str(),
                cti::format_number(report.params.beta).c_str(),
                cti::format_number(report.params.gamma).c_str(),
                cti::format_number(report.params.T_years).c_str(),
                cti::format_number(report.params.delta_t0_years).c_str());
    for (const auto& w : report.warnings) {
        std::printf("warning %s\n", w.c_str());
    }
}

std::vector<std::vector<cti::Cell>> projection_rows(const cti::ShareCurveParams& params,
                                                    const cti::EmaConfig& ema,
                                                    const std::vector<double>& grid) {
    std::vector<std::vector<cti::Cell>> rows;
    rows.reserve(grid.size());
    for (double t : grid) {
        const double y = cti::y_trial(t, params);
        const double p = cti::share_from_log_odds(y);
        const double index = cti::cti_from_share(p, ema);
        rows.push_back({t, y, p, index, std::string(cti::to_string(cti::classify(index)))});
    }
    return rows;
}

void write_projection(const fs::path& dir, const std::string& stem,
                      const cti::ShareCurveParams& params, const cti::EmaConfig& ema,
                      const std::vector<double>& grid) {
    const auto rows = projection_rows(params, ema, grid);
    cti::write_table_file(dir / (stem + ".csv"), {"t_years", "y", "share", "cti", "region"}, rows);
    cti::PlotSeries curve{"CTI", {}};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        curve.points.emplace_back(grid[i], std::get<double>(rows[i][3]));
    }
    cti::emit_plot({curve}, dir / (stem + ".svg"),
                   {"CTI projection", "t [years]", "CTI"});
}

void write_rate(const fs::path& dir, const std::string& stem,
                const cti::ShareCurveParams& params, const cti::EmaConfig& ema,
                const std::vector<double>& grid) {
    const auto profile = cti::rate_profile(params, ema, grid);
    std::vector<std::vector<cti::Cell>> rows;
    rows.reserve(profile.size());
    cti::PlotSeries curve{"dCTI/dt", {}};
    for (const auto& s : profile) {
        rows.push_back({s.t_years, s.share, s.sigma_e, s.dsigma_dt, s.dcti_dt});
        curve.points.emplace_back(s.t_years, s.dcti_dt);
    }
    cti::write_table_file(dir / (stem + ".csv"),
                          {"t_years", "share", "sigma_e", "dsigma_dt", "dcti_dt"}, rows);
    cti::emit_plot({curve}, dir / (stem + ".svg"),
                   {"CTI growth rate", "t [years]", "dCTI/dt [1/year]"});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cashless transaction index toolkit"};
    app.require_subcommand(1);

    std::string config_flag;
    app.add_option("--config", config_flag, "Run configuration JSON (or CTI_CONFIG env var)");

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "Calibrate the share curve for one country");
    std::string fit_input, fit_country, fit_model = "auto", fit_out = ".";
    std::optional<double> fit_gamma;
    fit_cmd->add_option("--input", fit_input, "Share series CSV (country,year,share)")->required();
    fit_cmd->add_option("--country", fit_country, "Country to calibrate")->required();
    fit_cmd->add_option("--model", fit_model, "Model selection override")
        ->check(CLI::IsMember({"auto", "linear", "quadratic"}))
        ->capture_default_str();
    fit_cmd->add_option("--gamma", fit_gamma, "Assumed gamma for linear-class fits");
    fit_cmd->add_option("--out", fit_out, "Output directory")->capture_default_str();

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "Map a share or CTI value to its region");
    std::optional<double> classify_share, classify_cti;
    classify_cmd->add_option("--share", classify_share, "Cashless share in [0,1]");
    classify_cmd->add_option("--cti", classify_cti, "CTI value in [0,10]");

    // project
    auto* project_cmd = app.add_subcommand("project", "Project share and CTI over time");
    std::string project_params, project_out;
    GridFlags project_grid;
    project_cmd->add_option("--params", project_params, "Share-curve parameter document")
        ->required();
    project_cmd->add_option("--out", project_out, "Output directory (default: CSV to stdout)");
    add_grid_flags(project_cmd, project_grid);

    // rate
    auto* rate_cmd = app.add_subcommand("rate", "CTI growth rate profile");
    std::string rate_params, rate_out;
    GridFlags rate_grid;
    rate_cmd->add_option("--params", rate_params, "Share-curve parameter document")->required();
    rate_cmd->add_option("--out", rate_out, "Output directory (default: CSV to stdout)");
    add_grid_flags(rate_cmd, rate_grid);

    // policy
    auto* policy_cmd = app.add_subcommand("policy", "Project intervention scenarios");
    std::string policy_params, policy_out;
    std::vector<double> policy_eps, policy_ti, policy_omega;
    GridFlags policy_grid;
    policy_cmd->add_option("--params", policy_params, "Share-curve parameter document")
        ->required();
    policy_cmd->add_option("--epsilon", policy_eps, "Policy impact on alpha [1/year], repeatable");
    policy_cmd->add_option("--ti", policy_ti, "Policy start time [years], repeatable");
    policy_cmd->add_option("--omega", policy_omega, "Policy ramp width [years], repeatable");
    policy_cmd->add_option("--out", policy_out, "Output directory (default: CSV to stdout)");
    add_grid_flags(policy_cmd, policy_grid);

    // report
    auto* report_cmd = app.add_subcommand("report", "Fit, project and rate every country");
    std::string report_input, report_out, report_model = "auto";
    std::optional<double> report_gamma;
    GridFlags report_grid;
    report_cmd->add_option("--input", report_input, "Share series CSV")->required();
    report_cmd->add_option("--out", report_out, "Output directory")->required();
    report_cmd->add_option("--model", report_model, "Model selection override")
        ->check(CLI::IsMember({"auto", "linear", "quadratic"}))
        ->capture_default_str();
    report_cmd->add_option("--gamma", report_gamma, "Assumed gamma for linear-class fits");
    add_grid_flags(report_cmd, report_grid);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2, --help exits 0
    }

    try {
        const cti::RunConfig config = cti::resolve_run_config(config_flag);
        const cti::EmaConfig ema = config.ema();

        if (fit_cmd->parsed()) {
            const auto all = cti::load_series_file(fit_input, config.share_unit);
            const auto& series = find_country(all, fit_country);
            const auto report =
                cti::calibrate_country(series, fit_gamma.value_or(config.gamma_default),
                                       config.T_years, parse_model(fit_model), config.z);
            const fs::path out_dir(fit_out);
            fs::create_directories(out_dir);
            const fs::path path = out_dir / (sanitize(report.country) + "_report.json");
            cti::save_report(path, report);
            print_report_summary(report);
            std::printf("wrote %s\n", path.string().c_str());
        } else if (classify_cmd->parsed()) {
            if (classify_share.has_value() == classify_cti.has_value()) {
                std::cerr << "usage error: give exactly one of --share or --cti\n";
                return 2;
            }
            double share = 0.0, index = 0.0;
            if (classify_share) {
                share = *classify_share;
                index = cti::cti_from_share(share, ema);
            } else {
                index = *classify_cti;
                share = cti::share_from_cti(index, ema);
            }
            std::printf("share %s\n", cti::format_number(share).c_str());
            std::printf("CTI %.4f\n", index);
            std::printf("region %s\n", cti::to_string(cti::classify(index)));
        } else if (project_cmd->parsed()) {
            const auto params = cti::load_params(project_params);
            const auto grid = build_grid(project_grid);
            if (project_out.empty()) {
                cti::write_table({"t_years", "y", "share", "cti", "region"},
                                 projection_rows(params, ema, grid), std::cout);
            } else {
                fs::create_directories(project_out);
                write_projection(project_out, "projection", params, ema, grid);
            }
        } else if (rate_cmd->parsed()) {
            const auto params = cti::load_params(rate_params);
            const auto grid = build_grid(rate_grid);
            if (rate_out.empty()) {
                const auto profile = cti::rate_profile(params, ema, grid);
                std::vector<std::vector<cti::Cell>> rows;
                for (const auto& s : profile) {
                    rows.push_back({s.t_years, s.share, s.sigma_e, s.dsigma_dt, s.dcti_dt});
                }
                cti::write_table({"t_years", "share", "sigma_e", "dsigma_dt", "dcti_dt"}, rows,
                                 std::cout);
            } else {
                fs::create_directories(rate_out);
                write_rate(rate_out, "rate", params, ema, grid);
            }
        } else if (policy_cmd->parsed()) {
            if (policy_eps.size() != policy_ti.size() || policy_eps.size() != policy_omega.size()) {
                std::cerr << "usage error: --epsilon, --ti and --omega must be repeated "
                             "the same number of times\n";
                return 2;
            }
            const auto params = cti::load_params(policy_params);
            std::vector<cti::PolicyEvent> events;
            for (std::size_t i = 0; i < policy_eps.size(); ++i) {
                events.push_back({policy_eps[i], policy_ti[i], policy_omega[i]});
            }
            const auto baseline = cti::make_scenario(params, {}, "baseline");
            const auto policy = cti::make_scenario(params, events, "policy");
            const auto grid = build_grid(policy_grid);
            const auto rows = cti::compare_scenarios({baseline, policy}, grid, ema);
            std::vector<std::vector<cti::Cell>> cells;
            for (const auto& r : rows) {
                cells.push_back({r.label, r.t_years, r.y, r.share, r.cti,
                                 std::string(cti::to_string(r.region))});
            }
            const std::vector<std::string> cols = {"scenario", "t_years", "y",
                                                   "share",    "cti",     "region"};
            if (policy_out.empty()) {
                cti::write_table(cols, cells, std::cout);
            } else {
                fs::create_directories(policy_out);
                cti::write_table_file(fs::path(policy_out) / "policy.csv", cols, cells);
                cti::PlotSeries base_curve{"baseline", {}}, policy_curve{"policy", {}};
                for (const auto& r : rows) {
                    (r.label == "baseline" ? base_curve : policy_curve)
                        .points.emplace_back(r.t_years, r.cti);
                }
                cti::emit_plot({base_curve, policy_curve}, fs::path(policy_out) / "policy.svg",
                               {"Policy scenarios", "t [years]", "CTI"});
            }
        } else if (report_cmd->parsed()) {
            const auto all = cti::load_series_file(report_input, config.share_unit);
            const fs::path out_dir(report_out);
            fs::create_directories(out_dir);
            const auto grid = build_grid(report_grid);
            std::vector<std::vector<cti::Cell>> summary;
            for (const auto& series : all) {
                const auto report =
                    cti::calibrate_country(series, report_gamma.value_or(config.gamma_default),
                                           config.T_years, parse_model(report_model), config.z);
                const std::string stem = sanitize(series.country);
                cti::save_report(out_dir / (stem + "_report.json"), report);
                write_projection(out_dir, stem + "_projection", report.params, ema, grid);
                write_rate(out_dir, stem + "_rate", report.params, ema, grid);
                const auto selected_r2 = report.selected == cti::FitModel::Linear
                                             ? report.linear.r_squared
                                             : report.quadratic.r_squared;
                summary.push_back({series.country, std::string(cti::to_string(report.selected)),
                                   report.params.alpha, report.params.beta, report.params.gamma,
                                   report.params.T_years, report.params.delta_t0_years,
                                   selected_r2});
            }
            cti::write_table_file(out_dir / "summary.csv",
                                  {"country", "selected", "alpha_per_year", "beta", "gamma",
                                   "T_years", "delta_t0_years", "r_squared"},
                                  summary);
            std::printf("wrote %zu countries to %s\n", summary.size(),
                        out_dir.string().c_str());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

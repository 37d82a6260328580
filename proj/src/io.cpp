#include "cti/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cti {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        fields.push_back(trim(field));
    }
    if (!line.empty() && line.back() == ',') {
        fields.push_back("");
    }
    return fields;
}

} // namespace

std::vector<CountrySeries> load_series(std::istream& in, ShareUnit unit) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("empty input: expected header 'country,year,share'");
    }
    {
        const auto header = split_csv_line(line);
        if (header.size() != 3 || header[0] != "country" || header[1] != "year" ||
            header[2] != "share") {
            throw std::invalid_argument("line 1: header must be 'country,year,share'");
        }
    }

    struct RawObs {
        Observation obs;
        std::size_t line_no;
    };
    std::vector<std::string> order;           // countries in first-appearance order
    std::map<std::string, std::vector<RawObs>> grouped;
    std::vector<std::string> errors;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        const std::string at = "line " + std::to_string(line_no) + ": ";
        if (fields.size() != 3) {
            errors.push_back(at + "expected 3 fields, got " + std::to_string(fields.size()));
            continue;
        }
        if (fields[0].empty()) {
            errors.push_back(at + "empty country name");
            continue;
        }
        int year = 0;
        try {
            std::size_t used = 0;
            year = std::stoi(fields[1], &used);
            if (used != fields[1].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            errors.push_back(at + "year '" + fields[1] + "' is not an integer");
            continue;
        }
        double share = 0.0;
        try {
            std::size_t used = 0;
            share = std::stod(fields[2], &used);
            if (used != fields[2].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            errors.push_back(at + "share '" + fields[2] + "' is not a number");
            continue;
        }
        if (unit == ShareUnit::Percent) {
            share /= 100.0;
        }
        if (!(share > 0.0 && share < 1.0)) {
            errors.push_back(at + "share must be strictly inside (0,1)");
            continue;
        }
        if (grouped.find(fields[0]) == grouped.end()) {
            order.push_back(fields[0]);
        }
        grouped[fields[0]].push_back({{year, share}, line_no});
    }

    std::vector<CountrySeries> result;
    for (const auto& country : order) {
        auto& raw = grouped[country];
        std::sort(raw.begin(), raw.end(), [](const RawObs& a, const RawObs& b) {
            return a.obs.year < b.obs.year;
        });
        std::vector<Observation> obs;
        obs.reserve(raw.size());
        bool ok = true;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (i > 0 && raw[i].obs.year == raw[i - 1].obs.year) {
                errors.push_back("line " + std::to_string(raw[i].line_no) + ": duplicate year " +
                                 std::to_string(raw[i].obs.year) + " for " + country);
                ok = false;
            }
            obs.push_back(raw[i].obs);
        }
        if (ok) {
            CountrySeries s;
            s.country = country;
            s.observations = std::move(obs);
            s.t_origin = s.observations.front().year;
            result.push_back(std::move(s));
        }
    }
    if (!errors.empty()) {
        std::string msg = "invalid share series:";
        for (const auto& e : errors) msg += "\n  " + e;
        throw std::invalid_argument(msg);
    }
    if (result.empty()) {
        throw std::invalid_argument("input contains no data rows");
    }
    return result;
}

std::vector<CountrySeries> load_series_file(const std::filesystem::path& path, ShareUnit unit) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return load_series(in, unit);
}

// ---------------------------------------------------------------------------
// JSON documents

namespace {

const json& require_key(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw std::invalid_argument("schema error: missing key '" + std::string(key) +
                                    "' at " + (path.empty() ? "document root" : path));
    }
    return *it;
}

double require_number(const json& j, const char* key, const std::string& path) {
    const json& v = require_key(j, key, path);
    if (!v.is_number()) {
        throw std::invalid_argument("schema error: key '" + std::string(key) + "' at " +
                                    (path.empty() ? "document root" : path) +
                                    " must be a number");
    }
    return v.get<double>();
}

json params_to_json(const ShareCurveParams& p) {
    return json{{"alpha_per_year", p.alpha},
                {"beta", p.beta},
                {"gamma", p.gamma},
                {"T_years", p.T_years},
                {"delta_t0_years", p.delta_t0_years}};
}

ShareCurveParams params_from_json(const json& j, const std::string& path) {
    ShareCurveParams p;
    p.alpha = require_number(j, "alpha_per_year", path);
    p.beta = require_number(j, "beta", path);
    p.gamma = require_number(j, "gamma", path);
    p.T_years = require_number(j, "T_years", path);
    p.delta_t0_years = require_number(j, "delta_t0_years", path);
    return p;
}

json fit_to_json(const LogisticFit& f) {
    json j{{"model", to_string(f.model)},
           {"r_squared", f.r_squared},
           {"t_origin", f.t_origin}};
    if (f.model == FitModel::Linear) {
        j["a2_per_year"] = f.a2;
        j["mu1"] = f.mu1;
    } else {
        j["b_per_year2"] = f.b;
        j["a20_per_year"] = f.a20;
        j["mu2"] = f.mu2;
    }
    return j;
}

FitModel fit_model_from_string(const std::string& s, const std::string& path) {
    if (s == "linear") return FitModel::Linear;
    if (s == "quadratic") return FitModel::Quadratic;
    throw std::invalid_argument("schema error: model '" + s + "' at " + path +
                                " must be 'linear' or 'quadratic'");
}

LogisticFit fit_from_json(const json& j, const std::string& path) {
    LogisticFit f;
    f.model = fit_model_from_string(require_key(j, "model", path).get<std::string>(), path);
    f.r_squared = require_number(j, "r_squared", path);
    f.t_origin = static_cast<int>(require_number(j, "t_origin", path));
    if (f.model == FitModel::Linear) {
        f.a2 = require_number(j, "a2_per_year", path);
        f.mu1 = require_number(j, "mu1", path);
    } else {
        f.b = require_number(j, "b_per_year2", path);
        f.a20 = require_number(j, "a20_per_year", path);
        f.mu2 = require_number(j, "mu2", path);
    }
    return f;
}

json width_to_json(const CurveWidth& w) {
    return json{{"tau_years", w.tau_years},
                {"t_half_years", w.t_half_years},
                {"t1_years", w.t1_years},
                {"t2_years", w.t2_years}};
}

CurveWidth width_from_json(const json& j, const std::string& path) {
    CurveWidth w;
    w.tau_years = require_number(j, "tau_years", path);
    w.t_half_years = require_number(j, "t_half_years", path);
    w.t1_years = require_number(j, "t1_years", path);
    w.t2_years = require_number(j, "t2_years", path);
    return w;
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

void save_json_file(const std::filesystem::path& path, const json& j) {
    write_file_atomic(path, j.dump(2) + "\n");
}

} // namespace

void save_params(const std::filesystem::path& path, const ShareCurveParams& params) {
    save_json_file(path, params_to_json(params));
}

ShareCurveParams load_params(const std::filesystem::path& path) {
    const json j = load_json_file(path);
    // Accept either a bare parameter document or a calibration report.
    if (j.contains("params")) {
        return params_from_json(j.at("params"), "params");
    }
    return params_from_json(j, "");
}

void save_report(const std::filesystem::path& path, const CalibrationReport& report) {
    json j{{"country", report.country},
           {"linear", fit_to_json(report.linear)},
           {"quadratic", fit_to_json(report.quadratic)},
           {"selected", to_string(report.selected)},
           {"params", params_to_json(report.params)},
           {"width", width_to_json(report.width)},
           {"warnings", report.warnings}};
    save_json_file(path, j);
}

CalibrationReport load_report(const std::filesystem::path& path) {
    const json j = load_json_file(path);
    CalibrationReport r;
    r.country = require_key(j, "country", "").get<std::string>();
    r.linear = fit_from_json(require_key(j, "linear", ""), "linear");
    r.quadratic = fit_from_json(require_key(j, "quadratic", ""), "quadratic");
    r.selected = fit_model_from_string(require_key(j, "selected", "").get<std::string>(), "selected");
    r.params = params_from_json(require_key(j, "params", ""), "params");
    r.width = width_from_json(require_key(j, "width", ""), "width");
    for (const auto& w : require_key(j, "warnings", "")) {
        r.warnings.push_back(w.get<std::string>());
    }
    return r;
}

void save_scenario(const std::filesystem::path& path, const Scenario& scenario) {
    json events = json::array();
    for (const auto& e : scenario.events) {
        events.push_back(json{{"epsilon_per_year", e.epsilon},
                              {"t_i_years", e.t_i_years},
                              {"omega_years", e.omega_years}});
    }
    save_json_file(path, json{{"label", scenario.label},
                              {"baseline", params_to_json(scenario.baseline)},
                              {"events", events}});
}

Scenario load_scenario(const std::filesystem::path& path) {
    const json j = load_json_file(path);
    std::vector<PolicyEvent> events;
    std::size_t i = 0;
    for (const auto& e : require_key(j, "events", "")) {
        const std::string at = "events[" + std::to_string(i++) + "]";
        PolicyEvent ev;
        ev.epsilon = require_number(e, "epsilon_per_year", at);
        ev.t_i_years = require_number(e, "t_i_years", at);
        ev.omega_years = require_number(e, "omega_years", at);
        events.push_back(ev);
    }
    return make_scenario(params_from_json(require_key(j, "baseline", ""), "baseline"),
                         std::move(events), require_key(j, "label", "").get<std::string>());
}

RunConfig load_run_config(const std::filesystem::path& path) {
    const json j = load_json_file(path);
    RunConfig cfg;
    if (j.contains("sigma_cash")) cfg.sigma_cash = j.at("sigma_cash").get<double>();
    if (j.contains("sigma_cashless")) cfg.sigma_cashless = j.at("sigma_cashless").get<double>();
    if (j.contains("z")) cfg.z = j.at("z").get<double>();
    if (j.contains("T_years")) cfg.T_years = j.at("T_years").get<double>();
    if (j.contains("gamma_default")) cfg.gamma_default = j.at("gamma_default").get<double>();
    if (j.contains("share_unit")) {
        const std::string unit = j.at("share_unit").get<std::string>();
        if (unit == "fraction") {
            cfg.share_unit = ShareUnit::Fraction;
        } else if (unit == "percent") {
            cfg.share_unit = ShareUnit::Percent;
        } else {
            throw std::invalid_argument("schema error: share_unit must be 'fraction' or 'percent'");
        }
    }
    cfg.validate();
    return cfg;
}

RunConfig resolve_run_config(const std::string& config_flag) {
    if (!config_flag.empty()) {
        return load_run_config(config_flag);
    }
    if (const char* env = std::getenv("CTI_CONFIG"); env != nullptr && *env != '\0') {
        return load_run_config(env);
    }
    return RunConfig{};
}

// ---------------------------------------------------------------------------
// tables

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

namespace {

std::string cell_to_string(const Cell& cell) {
    if (std::holds_alternative<long long>(cell)) {
        return std::to_string(std::get<long long>(cell));
    }
    if (std::holds_alternative<double>(cell)) {
        return format_number(std::get<double>(cell));
    }
    return std::get<std::string>(cell);
}

} // namespace

std::size_t write_table(const std::vector<std::string>& columns,
                        const std::vector<std::vector<Cell>>& rows, std::ostream& out) {
    std::string text;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i > 0) text += ',';
        text += columns[i];
    }
    text += '\n';
    for (const auto& row : rows) {
        if (row.size() != columns.size()) {
            throw std::invalid_argument("write_table: row width does not match header");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) text += ',';
            text += cell_to_string(row[i]);
        }
        text += '\n';
    }
    out << text;
    return text.size();
}

std::size_t write_table_file(const std::filesystem::path& path,
                             const std::vector<std::string>& columns,
                             const std::vector<std::vector<Cell>>& rows) {
    std::ostringstream out;
    const std::size_t bytes = write_table(columns, rows, out);
    write_file_atomic(path, out.str());
    return bytes;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << content;
        if (!out) {
            throw std::runtime_error("short write to " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

} // namespace cti

#include "costcast/config.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "costcast/csv.hpp"
#include "costcast/errors.hpp"

namespace costcast {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool to_bool(const std::string& v) {
    return v == "on" || v == "true" || v == "1" || v == "yes";
}

std::vector<double> parse_list(const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

}  // namespace

std::map<std::string, std::map<std::string, std::string>> parse_ini(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::map<std::string, std::map<std::string, std::string>> out;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(path + ":" + std::to_string(lineno) + ": malformed section");
            section = trim(line.substr(1, line.size() - 2));
            out[section];
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        out[section][trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

RunConfig load_config(const std::string& path) {
    auto ini = parse_ini(path);
    RunConfig cfg;
    cfg.config_path = path;
    auto get = [&](const std::string& sec, const std::string& key,
                   const std::string& fallback) -> std::string {
        auto s = ini.find(sec);
        if (s == ini.end()) return fallback;
        auto k = s->second.find(key);
        return k == s->second.end() ? fallback : k->second;
    };
    auto base = std::filesystem::path(path).parent_path();
    auto resolve = [&](const std::string& p) -> std::string {
        if (p.empty()) return p;
        std::filesystem::path fp(p);
        return fp.is_absolute() ? p : (base / fp).string();
    };

    cfg.sales_path = resolve(get("data", "sales", ""));
    cfg.calendar_path = resolve(get("data", "calendar", ""));
    if (ini.count("filter")) {
        for (const auto& [k, v] : ini["filter"]) cfg.filter.emplace_back(k, v);
    }
    cfg.valid_days = std::stoi(get("split", "valid_days", "28"));
    cfg.test_days = std::stoi(get("split", "test_days", "28"));

    for (const char* name : {"naive", "holt_winters", "arima", "gbr"}) {
        if (to_bool(get("models", name, name == std::string("naive") ? "on" : "off")))
            cfg.models.push_back(name);
    }
    cfg.gbr.trees = std::stoi(get("gbr", "trees", "300"));
    cfg.gbr.learning_rate = std::stod(get("gbr", "learning_rate", "0.05"));
    cfg.gbr.max_depth = std::stoi(get("gbr", "max_depth", "6"));
    cfg.gbr.min_leaf = std::stoi(get("gbr", "min_leaf", "20"));
    cfg.gbr_tune = to_bool(get("gbr", "tune", "off"));

    if (ini.count("external")) {
        for (const auto& [k, v] : ini["external"]) cfg.external_forecasts.emplace_back(k, resolve(v));
    }

    cfg.sweep_h = std::stod(get("sweep", "h", "1"));
    cfg.sweep_b = parse_list(get("sweep", "b_values", "2,5,10"));
    cfg.baseline = get("sweep", "baseline", "naive");

    cfg.echelon_enabled = to_bool(get("echelon", "enabled", "on"));
    cfg.echelon_h_dc = std::stod(get("echelon", "h_dc", "1"));
    cfg.echelon_b_dc = std::stod(get("echelon", "b_dc", "5"));
    cfg.echelon_b_store = std::stod(get("echelon", "b_store", "5"));
    cfg.echelon_initial_inventory = std::stod(get("echelon", "initial_dc_inventory", "0"));
    cfg.echelon_max_stores = std::stoi(get("echelon", "max_stores", "0"));

    cfg.output_dir = get("run", "output_dir", "out");
    if (const char* env = std::getenv("COSTCAST_OUTPUT_DIR")) cfg.output_dir = env;
    cfg.seed = std::stoul(get("run", "seed", "42"));
    cfg.verbose_dumps = to_bool(get("run", "verbose", "off"));
    return cfg;
}

std::vector<std::string> validate_config(const RunConfig& cfg) {
    std::vector<std::string> diags;
    if (cfg.sales_path.empty()) diags.push_back("data.sales: path not set");
    if (cfg.calendar_path.empty()) diags.push_back("data.calendar: path not set");
    for (const auto& [name, path] :
         std::vector<std::pair<std::string, std::string>>{{"data.sales", cfg.sales_path},
                                                          {"data.calendar", cfg.calendar_path}}) {
        if (!path.empty() && !std::filesystem::exists(path))
            diags.push_back(name + ": file not found: " + path);
    }
    for (const auto& [model, path] : cfg.external_forecasts) {
        if (!std::filesystem::exists(path))
            diags.push_back("external." + model + ": file not found: " + path);
    }
    if (cfg.valid_days <= 0) diags.push_back("split.valid_days: must be positive");
    if (cfg.test_days <= 0) diags.push_back("split.test_days: must be positive");
    if (cfg.models.empty() && cfg.external_forecasts.empty())
        diags.push_back("models: no native models enabled and no external forecasts given");
    if (cfg.sweep_b.empty()) diags.push_back("sweep.b_values: must be non-empty");
    for (double b : cfg.sweep_b) {
        if (!(b > 0)) diags.push_back("sweep.b_values: all values must be positive");
    }
    bool baseline_known =
        std::find(cfg.models.begin(), cfg.models.end(), cfg.baseline) != cfg.models.end();
    for (const auto& [model, path] : cfg.external_forecasts)
        if (model == cfg.baseline) baseline_known = true;
    if (!baseline_known)
        diags.push_back("sweep.baseline: '" + cfg.baseline + "' is not among the run's models");
    if (cfg.gbr.trees <= 0) diags.push_back("gbr.trees: must be positive");
    if (!(cfg.gbr.learning_rate > 0)) diags.push_back("gbr.learning_rate: must be positive");
    if (cfg.gbr.max_depth <= 0) diags.push_back("gbr.max_depth: must be positive");
    if (cfg.gbr.min_leaf <= 0) diags.push_back("gbr.min_leaf: must be positive");
    if (cfg.echelon_enabled) {
        if (!(cfg.echelon_h_dc > 0) || !(cfg.echelon_b_dc > 0) || !(cfg.echelon_b_store > 0))
            diags.push_back("echelon: costs must be strictly positive");
        if (cfg.echelon_initial_inventory < 0)
            diags.push_back("echelon.initial_dc_inventory: must be >= 0");
    }

    // Cheap pre-load check: the filter must match at least one sales row.
    if (diags.empty() && !cfg.filter.empty()) {
        try {
            csv::Table sales = csv::read_file(cfg.sales_path);
            size_t matched = 0;
            std::vector<std::pair<int, std::string>> cols;
            bool cols_ok = true;
            for (const auto& [col, value] : cfg.filter) {
                int c = sales.column(col);
                if (c < 0) {
                    diags.push_back("filter." + col + ": column not in sales file");
                    cols_ok = false;
                } else {
                    cols.emplace_back(c, value);
                }
            }
            if (cols_ok) {
                for (const auto& row : sales.rows) {
                    bool ok = true;
                    for (const auto& [c, value] : cols) ok = ok && row[c] == value;
                    if (ok) ++matched;
                }
                if (matched == 0) diags.push_back("filter: matches zero series");
            }
        } catch (const std::exception& e) {
            diags.push_back(std::string("data.sales: ") + e.what());
        }
    }
    return diags;
}

}  // namespace costcast

#pragma once

#include <map>
#include <string>
#include <vector>

#include "costcast/boosting.hpp"
#include "costcast/panel.hpp"

namespace costcast {

// Plain-text sectioned key/value run configuration. The file is the
// reproducibility artifact: the run manifest embeds its hash.
struct RunConfig {
    std::string config_path;

    std::string sales_path;
    std::string calendar_path;
    Filter filter;

    int valid_days = 28;
    int test_days = 28;

    std::vector<std::string> models;  // subset of {naive, holt_winters, arima, gbr}
    GbrHyper gbr;
    bool gbr_tune = false;

    // External forecast files: model name -> path (test-split forecasts).
    std::vector<std::pair<std::string, std::string>> external_forecasts;

    double sweep_h = 1.0;
    std::vector<double> sweep_b = {2, 5, 10};
    std::string baseline = "naive";

    bool echelon_enabled = true;
    double echelon_h_dc = 1.0;
    double echelon_b_dc = 5.0;
    double echelon_b_store = 5.0;
    double echelon_initial_inventory = 0.0;
    int echelon_max_stores = 0;  // 0: every series is a store

    std::string output_dir = "out";
    unsigned long seed = 42;
    bool verbose_dumps = false;  // per-day cost matrices, DC inventory trace
};

// Raw INI-ish contents: section -> key -> value. Lines `key = value`,
// sections `[name]`, comments with `#`.
std::map<std::string, std::map<std::string, std::string>> parse_ini(const std::string& path);

RunConfig load_config(const std::string& path);

// Schema and cross-reference checks without running the pipeline.
// Returns human-readable diagnostics; empty means valid.
std::vector<std::string> validate_config(const RunConfig& cfg);

}  // namespace costcast

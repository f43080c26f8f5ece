#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "costcast/config.hpp"
#include "costcast/errors.hpp"
#include "costcast/features.hpp"
#include "costcast/forecast_io.hpp"
#include "costcast/metrics.hpp"
#include "costcast/pipeline.hpp"

namespace {

// Exit codes: 0 success, 1 validation failure, 2 runtime failure.
constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kRuntimeFailure = 2;

int validate_and_report(const costcast::RunConfig& cfg) {
    const auto diags = costcast::validate_config(cfg);
    for (const auto& d : diags) std::cerr << "config: " << d << "\n";
    return diags.empty() ? kOk : kValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"costcast: demand forecasting evaluated by newsvendor inventory cost"};
    app.require_subcommand(1);

    std::string config_path, forecast_path;

    auto* run = app.add_subcommand("run", "run the full pipeline and write reports");
    run->add_option("config", config_path, "run configuration file")->required();

    auto* validate = app.add_subcommand("validate", "check a configuration without running");
    validate->add_option("config", config_path, "run configuration file")->required();

    auto* exportf = app.add_subcommand("export-features", "dump the feature matrix to CSV");
    exportf->add_option("config", config_path, "run configuration file")->required();

    auto* importf =
        app.add_subcommand("import-forecasts", "validate an external forecast file and score it");
    importf->add_option("config", config_path, "run configuration file")->required();
    importf->add_option("file", forecast_path, "forecast CSV file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const costcast::RunConfig cfg = costcast::load_config(config_path);
        if (validate->parsed()) return validate_and_report(cfg);
        if (int rc = validate_and_report(cfg); rc != kOk) return rc;

        if (run->parsed()) {
            costcast::run_pipeline(cfg);
            std::cout << "reports written to " << cfg.output_dir << "\n";
        } else if (exportf->parsed()) {
            const auto data = costcast::load_data(cfg);
            const std::string path = cfg.output_dir + "/features.csv";
            std::filesystem::create_directories(cfg.output_dir);
            costcast::write_features_csv(data.features, data.panel, path);
            std::cout << "feature matrix written to " << path << "\n";
        } else if (importf->parsed()) {
            const auto data = costcast::load_data(cfg);
            const auto fc = costcast::import_forecasts(forecast_path, data.panel, data.test_window);
            const auto acc = costcast::accuracy_report(fc, data.panel);
            std::cout << "model=" << acc.model_name << " rmse=" << acc.rmse << " mae=" << acc.mae
                      << " n=" << acc.n_points << "\n";
        }
        return kOk;
    } catch (const costcast::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kValidationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRuntimeFailure;
    }
}

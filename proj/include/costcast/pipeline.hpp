#pragma once

#include <string>
#include <vector>

#include "costcast/config.hpp"
#include "costcast/forecast.hpp"

namespace costcast {

// Runs ingestion -> features -> fit/ingest -> metrics -> simulate -> sweep ->
// reports. Writes all artifacts into cfg.output_dir. Deterministic given the
// config, seed, and input files. Throws on runtime failure; the manifest of a
// partial run flags which artifacts were written.
void run_pipeline(const RunConfig& cfg);

// Shared by run_pipeline and the import-forecasts subcommand.
struct LoadedData {
    SeriesPanel panel;
    FeatureMatrix features;
    SplitSpec splits;
    DayRange validation_window;
    DayRange test_window;
};
LoadedData load_data(const RunConfig& cfg);

// Fits the configured native models (through valid_end, with optional GBR
// tuning against the validation split) and returns test-window forecasts,
// followed by imported external forecast sets.
std::vector<ForecastSet> make_forecasts(const RunConfig& cfg, const LoadedData& data,
                                        std::string* audit_json = nullptr);

}  // namespace costcast

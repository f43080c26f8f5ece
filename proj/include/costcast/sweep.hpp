#pragma once

#include <string>
#include <vector>

#include "costcast/metrics.hpp"
#include "costcast/newsvendor.hpp"

namespace costcast {

struct SweepSpec {
    double holding = 1.0;
    std::vector<double> b_values = {2, 5, 10};
    std::string baseline = "naive";
    double reference_b = 5.0;  // deltas are quoted at (h, b) = (1, 5)
};

struct SimReportRow {
    std::string model;
    double b = 0;
    double avg_cost = 0;
    double fill_rate = 0;
    double rmse = 0;
    double mae = 0;
    double cost_reduction_pct = 0;  // vs baseline at the same b
    double fill_gain_pp = 0;
};

struct SimReport {
    std::vector<SimReportRow> rows;  // ordered by model (input order), then b
    // Max deviation of avg_cost(b) from its least-squares line, per model.
    std::vector<std::pair<std::string, double>> affinity_residuals;
    // Model names ordered by ascending cost, per b (rank-stability diagnostic).
    std::vector<std::pair<double, std::vector<std::string>>> rankings;
};

// Cross product of models x shortage penalties with baseline-relative deltas.
// All forecast sets must share one window.
SimReport run_sweep(const std::vector<const ForecastSet*>& models, const SeriesPanel& panel,
                    const SweepSpec& spec);

// Max |avg_cost(b) - fitted line|, for the affinity check.
double affinity_residual(const std::vector<double>& b_values, const std::vector<double>& costs);

}  // namespace costcast

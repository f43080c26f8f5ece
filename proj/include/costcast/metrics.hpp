#pragma once

#include <string>
#include <vector>

#include "costcast/forecast.hpp"
#include "costcast/panel.hpp"

namespace costcast {

struct AccuracyReport {
    std::string model_name;
    double rmse = 0;
    double mae = 0;
    double mape = 0;
    bool mape_unreliable = false;  // fires above 1000%; intermittent demand caveat
    size_t n_points = 0;
};

// Pooled (micro-averaged) metrics over every (series, day) cell in the window.
double rmse(const ForecastSet& fs, const SeriesPanel& panel);
double mae(const ForecastSet& fs, const SeriesPanel& panel);
// Mean of |error| / (|actual| + eps); blows up on zero-demand days.
double mape(const ForecastSet& fs, const SeriesPanel& panel, double eps = 1e-8);

AccuracyReport accuracy_report(const ForecastSet& fs, const SeriesPanel& panel);

// Per-series RMSE breakdown for diagnostics.
std::vector<double> per_series_rmse(const ForecastSet& fs, const SeriesPanel& panel);

}  // namespace costcast

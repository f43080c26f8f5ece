#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "costcast/panel.hpp"

namespace costcast {

// Engineered regressors per (series, day). Every feature for day t is a
// function of demand strictly before t plus the exogenous calendar at t.
// Rolling windows end at t-1: including day t would leak the target.
struct FeatureMatrix {
    std::vector<std::string> column_names;
    size_t n_series = 0;
    size_t n_days = 0;
    int first_d = 1;
    std::vector<double> values;   // row-major, row = series * n_days + day
    std::vector<uint8_t> valid;   // warm-up rows (first 28 days of a series) are invalid

    size_t n_cols() const { return column_names.size(); }
    size_t row(size_t series, size_t day) const { return series * n_days + day; }
    double at(size_t series, size_t day, size_t col) const {
        return values[row(series, day) * n_cols() + col];
    }
    std::span<const double> row_values(size_t series, size_t day) const {
        return {values.data() + row(series, day) * n_cols(), n_cols()};
    }
    bool is_valid(size_t series, size_t day) const { return valid[row(series, day)] != 0; }
    int column(const std::string& name) const;
};

// Mean of the `window` values immediately before position t (1-based); day t
// itself is excluded. nullopt when the window is not fully in the past.
std::optional<double> rolling_mean(std::span<const std::int64_t> values, int window, size_t t);
std::optional<double> rolling_mean(std::span<const double> values, int window, size_t t);

// Columns: lag_{1,7,14,28}, rollmean_{7,14,28}, raw weekday/month, weekday and
// month one-hots, one flag per calendar event name, snap (resolved by the
// series' state). Rows with incomplete history are marked invalid, never filled.
FeatureMatrix build_features(const SeriesPanel& panel);

// Audit dump: one row per valid (series, day).
void write_features_csv(const FeatureMatrix& fm, const SeriesPanel& panel, const std::string& path);

}  // namespace costcast

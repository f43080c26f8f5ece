#include "costcast/metrics.hpp"

#include <cmath>

#include "costcast/errors.hpp"

namespace costcast {

namespace {

void check(const ForecastSet& fs, const SeriesPanel& panel) {
    if (fs.window.size() <= 0) throw CoverageError("metric over an empty window is undefined");
    if (fs.window.start_d < panel.first_d() || fs.window.end_d > panel.last_d())
        throw CoverageError("forecast window lies outside the panel");
    if (fs.n_series != panel.n_series())
        throw ReferenceError("forecast set does not match panel series count");
}

}  // namespace

double rmse(const ForecastSet& fs, const SeriesPanel& panel) {
    check(fs, panel);
    double sq = 0;
    size_t n = 0;
    for (size_t i = 0; i < fs.n_series; ++i) {
        for (int d = fs.window.start_d; d <= fs.window.end_d; ++d) {
            const double e = fs.at(i, d) - static_cast<double>(panel.demand_at(i, d));
            sq += e * e;
            ++n;
        }
    }
    return std::sqrt(sq / static_cast<double>(n));
}

double mae(const ForecastSet& fs, const SeriesPanel& panel) {
    check(fs, panel);
    double abs_sum = 0;
    size_t n = 0;
    for (size_t i = 0; i < fs.n_series; ++i) {
        for (int d = fs.window.start_d; d <= fs.window.end_d; ++d) {
            abs_sum += std::fabs(fs.at(i, d) - static_cast<double>(panel.demand_at(i, d)));
            ++n;
        }
    }
    return abs_sum / static_cast<double>(n);
}

double mape(const ForecastSet& fs, const SeriesPanel& panel, double eps) {
    check(fs, panel);
    double sum = 0;
    size_t n = 0;
    for (size_t i = 0; i < fs.n_series; ++i) {
        for (int d = fs.window.start_d; d <= fs.window.end_d; ++d) {
            const double actual = static_cast<double>(panel.demand_at(i, d));
            sum += std::fabs(fs.at(i, d) - actual) / (std::fabs(actual) + eps);
            ++n;
        }
    }
    return sum / static_cast<double>(n);
}

AccuracyReport accuracy_report(const ForecastSet& fs, const SeriesPanel& panel) {
    AccuracyReport r;
    r.model_name = fs.model_name;
    r.rmse = rmse(fs, panel);
    r.mae = mae(fs, panel);
    r.mape = mape(fs, panel);
    r.mape_unreliable = r.mape > 10.0;  // >1000%
    r.n_points = fs.n_series * static_cast<size_t>(fs.window.size());
    return r;
}

std::vector<double> per_series_rmse(const ForecastSet& fs, const SeriesPanel& panel) {
    check(fs, panel);
    std::vector<double> out(fs.n_series);
    for (size_t i = 0; i < fs.n_series; ++i) {
        double sq = 0;
        for (int d = fs.window.start_d; d <= fs.window.end_d; ++d) {
            const double e = fs.at(i, d) - static_cast<double>(panel.demand_at(i, d));
            sq += e * e;
        }
        out[i] = std::sqrt(sq / fs.window.size());
    }
    return out;
}

}  // namespace costcast

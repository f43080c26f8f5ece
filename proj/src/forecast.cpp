#include "costcast/forecast.hpp"

#include <cmath>

#include "costcast/errors.hpp"

namespace costcast {

std::string split_name(Split s) { return s == Split::Validation ? "validation" : "test"; }

Split split_from_name(const std::string& name) {
    if (name == "validation") return Split::Validation;
    if (name == "test") return Split::Test;
    throw ParseError("unknown split '" + name + "'");
}

void ForecastSet::validate() const {
    if (window.size() <= 0) throw CoverageError("forecast window is empty");
    if (values.size() != n_series * static_cast<size_t>(window.size()))
        throw CoverageError("forecast matrix does not match series x window");
    for (double v : values) {
        if (!std::isfinite(v)) throw ParseError("non-finite forecast value");
    }
}

void Forecaster::check_window(DayRange window) const {
    if (window.size() <= 0) throw CoverageError("forecast window is empty");
    if (window.start_d <= fit_end_d_)
        throw LeakageError("window starts at d_" + std::to_string(window.start_d) +
                           " but model was fitted through d_" + std::to_string(fit_end_d_));
}

ForecastSet naive_forecast(const SeriesPanel& panel, DayRange window, Split split) {
    if (window.start_d <= panel.first_d())
        throw InsufficientHistoryError("naive forecast needs a day before the window");
    if (window.end_d > panel.last_d())
        throw CoverageError("window extends past the panel horizon");
    ForecastSet fs;
    fs.model_name = "naive";
    fs.split = split;
    fs.window = window;
    fs.n_series = panel.n_series();
    fs.values.resize(fs.n_series * window.size());
    for (size_t i = 0; i < fs.n_series; ++i) {
        for (int d = window.start_d; d <= window.end_d; ++d) {
            fs.at(i, d) = static_cast<double>(panel.demand_at(i, d - 1));
        }
    }
    return fs;
}

ForecastSet NaiveForecaster::predict(const SeriesPanel& panel, const FeatureMatrix&,
                                     DayRange window, Split split) const {
    check_window(window);
    return naive_forecast(panel, window, split);
}

}  // namespace costcast

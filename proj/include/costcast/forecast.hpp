#pragma once

#include <memory>
#include <string>
#include <vector>

#include "costcast/features.hpp"
#include "costcast/panel.hpp"

namespace costcast {

enum class Split { Validation, Test };

std::string split_name(Split s);
Split split_from_name(const std::string& name);

// Inclusive day range [start_d, end_d] in d_index coordinates.
struct DayRange {
    int start_d = 0;
    int end_d = 0;
    int size() const { return end_d - start_d + 1; }
    bool contains(int d) const { return d >= start_d && d <= end_d; }
};

// One-step-ahead point forecasts for every (series, day) in a window.
// The forecast for day t is computed from information through day t-1 only.
struct ForecastSet {
    std::string model_name;
    Split split = Split::Test;
    DayRange window;
    size_t n_series = 0;
    std::vector<double> values;  // row-major [series][day offset in window]
    bool clamped = false;        // negatives floored (importers may set this)

    double at(size_t series, int d_index) const {
        return values[series * window.size() + (d_index - window.start_d)];
    }
    double& at(size_t series, int d_index) {
        return values[series * window.size() + (d_index - window.start_d)];
    }
    // Throws if dimensions mismatch or any cell is non-finite.
    void validate() const;
};

// Common forecaster surface. fit() learns from panel data with d <= fit_end_d;
// predict() rolls one-step-ahead through the window, feeding realized demand
// into state-update models. Predicting a window that overlaps the fit data is
// a leakage error.
class Forecaster {
public:
    virtual ~Forecaster() = default;
    virtual std::string name() const = 0;
    virtual void fit(const SeriesPanel& panel, const FeatureMatrix& features, int fit_end_d) = 0;
    virtual ForecastSet predict(const SeriesPanel& panel, const FeatureMatrix& features,
                                DayRange window, Split split) const = 0;
    int fit_end_d() const { return fit_end_d_; }

protected:
    void check_window(DayRange window) const;
    int fit_end_d_ = 0;
};

// Persistence baseline: the forecast for day t is realized demand at t-1.
ForecastSet naive_forecast(const SeriesPanel& panel, DayRange window,
                           Split split = Split::Test);

class NaiveForecaster final : public Forecaster {
public:
    std::string name() const override { return "naive"; }
    void fit(const SeriesPanel&, const FeatureMatrix&, int fit_end_d) override {
        fit_end_d_ = fit_end_d;
    }
    ForecastSet predict(const SeriesPanel& panel, const FeatureMatrix&, DayRange window,
                        Split split) const override;
};

}  // namespace costcast

#pragma once

#include <span>
#include <vector>

#include "costcast/forecast.hpp"

namespace costcast {

// Additive Holt-Winters state with weekly seasonality (m = 7 by default).
// seasonal[0] is the factor the next one-step forecast consumes (s_{t+1-m});
// seasonal.back() is the most recently updated factor (s_t).
struct HoltWintersState {
    double level = 0;
    double trend = 0;
    std::vector<double> seasonal;
    double alpha = 0, beta = 0, gamma = 0;
    int m = 7;
};

// ŷ_{t+1|t} = ℓ_t + b_t + s_{t+1-m}, read off the current state.
double hw_point(const HoltWintersState& state);

// Applies the level/trend/seasonal recursions with observation y_t.
// Returns the updated state and the one-step forecast for t+1.
std::pair<HoltWintersState, double> hw_forecast_step(const HoltWintersState& state, double y_t);

// Fits alpha/beta/gamma by minimizing in-sample one-step SSE over [0,1]^3
// (coarse grid then simplex refinement), with the standard moment
// initialization: level = mean of the first season, trend = average
// first-vs-second-season difference / m, seasonals = first-season deviations.
// The returned state is the *initial* state (positioned after the first
// season); replaying observations from index m reproduces the fit.
HoltWintersState hw_fit(std::span<const double> train, int m = 7);

// One-step in-sample sum of squared errors for fixed parameters; exposed for
// the fitter and for tests.
double hw_sse(std::span<const double> series, const HoltWintersState& init);

class HoltWintersForecaster final : public Forecaster {
public:
    explicit HoltWintersForecaster(int m = 7) : m_(m) {}
    std::string name() const override { return "holt_winters"; }
    void fit(const SeriesPanel& panel, const FeatureMatrix&, int fit_end_d) override;
    ForecastSet predict(const SeriesPanel& panel, const FeatureMatrix&, DayRange window,
                        Split split) const override;
    const std::vector<HoltWintersState>& per_series_init() const { return init_; }

private:
    int m_;
    std::vector<HoltWintersState> init_;  // fitted initial state per series
};

}  // namespace costcast

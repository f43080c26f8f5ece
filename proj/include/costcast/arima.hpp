#pragma once

#include <span>
#include <vector>

#include "costcast/forecast.hpp"

namespace costcast {

// ARIMA(1,1,1) parameters on the differenced series. Construction enforces
// stationarity/invertibility of the differenced process.
struct ArimaParams {
    double c = 0;       // drift
    double phi = 0;     // AR(1) coefficient, |phi| < 1
    double theta = 0;   // MA(1) coefficient, |theta| < 1
    double sigma2 = 0;  // innovation variance

    ArimaParams() = default;
    ArimaParams(double c_, double phi_, double theta_, double sigma2_ = 0);
};

struct ArimaFit {
    ArimaParams params;
    bool converged = true;  // false: iteration budget hit, params are best-so-far
    double css = 0;         // conditional sum of squares at the optimum
};

// Conditional sum of squares of the residual recursion on the differenced
// series (pre-sample residual = 0, conditioning on the first difference).
double arima_css(const ArimaParams& params, std::span<const double> diffs);

// Estimates (c, phi, theta) by minimizing the CSS with a derivative-free
// search under the |phi|,|theta| < 1 box; sigma2 = residual variance.
ArimaFit arima_fit(std::span<const double> train);

// ŷ_{t+1|t} = y_t + c + phi (y_t - y_{t-1}) + theta ε̂_t, residuals rebuilt
// recursively from the start of `history` with zero pre-sample.
double arima_forecast_step(const ArimaParams& params, std::span<const double> history);

class ArimaForecaster final : public Forecaster {
public:
    std::string name() const override { return "arima"; }
    void fit(const SeriesPanel& panel, const FeatureMatrix&, int fit_end_d) override;
    ForecastSet predict(const SeriesPanel& panel, const FeatureMatrix&, DayRange window,
                        Split split) const override;
    const std::vector<ArimaFit>& per_series_fit() const { return fits_; }
    bool any_convergence_warning() const;

private:
    std::vector<ArimaFit> fits_;
};

}  // namespace costcast

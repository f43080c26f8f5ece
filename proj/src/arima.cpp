#include "costcast/arima.hpp"

#include <cmath>
#include <limits>

#include "costcast/errors.hpp"
#include "costcast/optimize.hpp"

namespace costcast {

namespace {
constexpr double kBox = 0.998;  // open box |phi|,|theta| < 1 mapped via tanh
constexpr size_t kMinTrain = 30;
}  // namespace

ArimaParams::ArimaParams(double c_, double phi_, double theta_, double sigma2_)
    : c(c_), phi(phi_), theta(theta_), sigma2(sigma2_) {
    if (!(std::fabs(phi) < 1.0)) throw std::invalid_argument("ARIMA: |phi| must be < 1");
    if (!(std::fabs(theta) < 1.0)) throw std::invalid_argument("ARIMA: |theta| must be < 1");
    if (sigma2 < 0) throw std::invalid_argument("ARIMA: sigma2 must be >= 0");
}

double arima_css(const ArimaParams& params, std::span<const double> diffs) {
    // Condition on diffs[0]; residual there is taken as 0.
    double sse = 0.0;
    double e_prev = 0.0;
    for (size_t t = 1; t < diffs.size(); ++t) {
        const double e = diffs[t] - params.c - params.phi * diffs[t - 1] - params.theta * e_prev;
        sse += e * e;
        e_prev = e;
    }
    return sse;
}

ArimaFit arima_fit(std::span<const double> train) {
    if (train.size() < kMinTrain)
        throw InsufficientHistoryError("ARIMA fit needs at least " + std::to_string(kMinTrain) +
                                       " observations");
    std::vector<double> diffs(train.size() - 1);
    for (size_t t = 0; t + 1 < train.size(); ++t) diffs[t] = train[t + 1] - train[t];

    auto unpack = [](const std::vector<double>& p) {
        return ArimaParams(p[0], kBox * std::tanh(p[1]), kBox * std::tanh(p[2]));
    };
    auto objective = [&](const std::vector<double>& p) { return arima_css(unpack(p), diffs); };

    // Fixed multistart: the CSS surface has a ridge where phi and theta
    // nearly cancel.
    const std::vector<std::vector<double>> seeds = {
        {0.0, 0.0, 0.0}, {0.0, 0.5, -0.5}, {0.0, -0.5, 0.5}, {0.0, 0.3, 0.3}};
    NelderMeadResult best;
    best.value = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (const auto& seed : seeds) {
        auto r = nelder_mead(objective, seed, 0.3, 1e-12, 800);
        if (r.value < best.value) {
            best = r;
            converged = r.converged;
        }
    }
    ArimaFit fit;
    fit.params = unpack(best.x);
    fit.css = best.value;
    fit.converged = converged;
    const size_t n = diffs.size() > 1 ? diffs.size() - 1 : 1;
    fit.params.sigma2 = best.value / static_cast<double>(n);
    return fit;
}

double arima_forecast_step(const ArimaParams& params, std::span<const double> history) {
    if (history.size() < 2)
        throw InsufficientHistoryError("ARIMA one-step forecast needs two observations");
    double e_prev = 0.0;
    double z_prev = history[1] - history[0];
    for (size_t t = 2; t < history.size(); ++t) {
        const double z = history[t] - history[t - 1];
        const double e = z - params.c - params.phi * z_prev - params.theta * e_prev;
        z_prev = z;
        e_prev = e;
    }
    const double y_t = history.back();
    return y_t + params.c + params.phi * z_prev + params.theta * e_prev;
}

void ArimaForecaster::fit(const SeriesPanel& panel, const FeatureMatrix&, int fit_end_d) {
    fit_end_d_ = fit_end_d;
    fits_.clear();
    fits_.reserve(panel.n_series());
    const size_t n_train = panel.day_offset(fit_end_d) + 1;
    std::vector<double> train(n_train);
    for (size_t i = 0; i < panel.n_series(); ++i) {
        for (size_t t = 0; t < n_train; ++t) train[t] = static_cast<double>(panel.demand(i, t));
        fits_.push_back(arima_fit(train));
    }
}

bool ArimaForecaster::any_convergence_warning() const {
    for (const auto& f : fits_)
        if (!f.converged) return true;
    return false;
}

ForecastSet ArimaForecaster::predict(const SeriesPanel& panel, const FeatureMatrix&,
                                     DayRange window, Split split) const {
    check_window(window);
    if (fits_.size() != panel.n_series()) throw ReferenceError("ARIMA model not fitted");
    if (window.end_d > panel.last_d()) throw CoverageError("window extends past the panel horizon");
    if (panel.day_offset(window.start_d) < 2)
        throw InsufficientHistoryError("ARIMA window needs two days of history before it");
    ForecastSet fs;
    fs.model_name = "arima";
    fs.split = split;
    fs.window = window;
    fs.n_series = panel.n_series();
    fs.values.resize(fs.n_series * window.size());
    const size_t end_off = panel.day_offset(window.end_d);
    std::vector<double> history(end_off + 1);
    for (size_t i = 0; i < panel.n_series(); ++i) {
        for (size_t t = 0; t <= end_off; ++t) history[t] = static_cast<double>(panel.demand(i, t));
        const ArimaParams& p = fits_[i].params;
        // Single pass: keep the residual recursion rolling from the origin and
        // emit a forecast as each window day comes up.
        double e_prev = 0.0;
        double z_prev = history[1] - history[0];
        auto emit = [&](size_t t_hist) {  // forecast for day offset t_hist using history < t_hist
            int d = panel.first_d() + static_cast<int>(t_hist);
            if (window.contains(d))
                fs.at(i, d) = history[t_hist - 1] + p.c + p.phi * z_prev + p.theta * e_prev;
        };
        emit(2);
        for (size_t t = 2; t <= end_off; ++t) {
            const double z = history[t] - history[t - 1];
            const double e = z - p.c - p.phi * z_prev - p.theta * e_prev;
            z_prev = z;
            e_prev = e;
            if (t + 1 <= end_off) emit(t + 1);
        }
    }
    fs.validate();
    return fs;
}

}  // namespace costcast

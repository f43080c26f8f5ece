#include "costcast/holt_winters.hpp"

#include <algorithm>
#include <cmath>

#include "costcast/errors.hpp"
#include "costcast/optimize.hpp"

namespace costcast {

double hw_point(const HoltWintersState& state) {
    return state.level + state.trend + state.seasonal.front();
}

std::pair<HoltWintersState, double> hw_forecast_step(const HoltWintersState& state, double y_t) {
    HoltWintersState s = state;
    const double s_tm = s.seasonal.front();  // s_{t-m}
    const double prev_level = s.level;
    s.level = s.alpha * (y_t - s_tm) + (1.0 - s.alpha) * (prev_level + s.trend);
    s.trend = s.beta * (s.level - prev_level) + (1.0 - s.beta) * s.trend;
    const double s_t = s.gamma * (y_t - s.level) + (1.0 - s.gamma) * s_tm;
    s.seasonal.erase(s.seasonal.begin());
    s.seasonal.push_back(s_t);
    const double fc = hw_point(s);
    return {std::move(s), fc};
}

namespace {

HoltWintersState initial_state(std::span<const double> train, int m) {
    HoltWintersState s;
    s.m = m;
    double first = 0, second = 0;
    for (int i = 0; i < m; ++i) first += train[i];
    for (int i = 0; i < m; ++i) second += train[m + i];
    s.level = first / m;
    s.trend = (second / m - first / m) / m;
    s.seasonal.resize(m);
    for (int i = 0; i < m; ++i) s.seasonal[i] = train[i] - s.level;
    return s;
}

}  // namespace

double hw_sse(std::span<const double> series, const HoltWintersState& init) {
    HoltWintersState state = init;
    double sse = 0.0;
    for (size_t t = init.m; t < series.size(); ++t) {
        const double err = series[t] - hw_point(state);
        sse += err * err;
        auto [next, fc] = hw_forecast_step(state, series[t]);
        (void)fc;
        state = std::move(next);
    }
    return sse;
}

HoltWintersState hw_fit(std::span<const double> train, int m) {
    if (static_cast<int>(train.size()) < 2 * m)
        throw InsufficientHistoryError("Holt-Winters fit needs at least two full seasons");
    HoltWintersState base = initial_state(train, m);

    auto clamp01 = [](double v) { return std::clamp(v, 0.0, 1.0); };
    auto objective = [&](const std::vector<double>& p) {
        HoltWintersState s = base;
        s.alpha = clamp01(p[0]);
        s.beta = clamp01(p[1]);
        s.gamma = clamp01(p[2]);
        return hw_sse(train, s);
    };

    // Coarse grid seed, then simplex refinement.
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> seed{0.5, 0.1, 0.1};
    for (double a = 0.0; a <= 1.0001; a += 0.25) {
        for (double b = 0.0; b <= 1.0001; b += 0.25) {
            for (double g = 0.0; g <= 1.0001; g += 0.25) {
                double v = objective({a, b, g});
                if (v < best) {
                    best = v;
                    seed = {a, b, g};
                }
            }
        }
    }
    auto res = nelder_mead(objective, seed, 0.1, 1e-12, 600);
    if (res.value > best) res.x = seed;
    HoltWintersState s = base;
    s.alpha = clamp01(res.x[0]);
    s.beta = clamp01(res.x[1]);
    s.gamma = clamp01(res.x[2]);
    return s;
}

void HoltWintersForecaster::fit(const SeriesPanel& panel, const FeatureMatrix&, int fit_end_d) {
    fit_end_d_ = fit_end_d;
    init_.clear();
    init_.reserve(panel.n_series());
    const size_t n_train = panel.day_offset(fit_end_d) + 1;
    std::vector<double> train(n_train);
    for (size_t i = 0; i < panel.n_series(); ++i) {
        for (size_t t = 0; t < n_train; ++t) train[t] = static_cast<double>(panel.demand(i, t));
        init_.push_back(hw_fit(train, m_));
    }
}

ForecastSet HoltWintersForecaster::predict(const SeriesPanel& panel, const FeatureMatrix&,
                                           DayRange window, Split split) const {
    check_window(window);
    if (init_.size() != panel.n_series()) throw ReferenceError("Holt-Winters model not fitted");
    if (window.end_d > panel.last_d()) throw CoverageError("window extends past the panel horizon");
    if (panel.day_offset(window.start_d) < static_cast<size_t>(m_))
        throw InsufficientHistoryError("window starts inside the first season");
    ForecastSet fs;
    fs.model_name = "holt_winters";
    fs.split = split;
    fs.window = window;
    fs.n_series = panel.n_series();
    fs.values.resize(fs.n_series * window.size());
    const size_t end_off = panel.day_offset(window.end_d);
    for (size_t i = 0; i < panel.n_series(); ++i) {
        HoltWintersState state = init_[i];
        // Replay realized demand from the fit origin; the forecast for day t
        // reads the state after observation t-1.
        for (size_t t = static_cast<size_t>(state.m); t <= end_off; ++t) {
            int d = panel.first_d() + static_cast<int>(t);
            if (window.contains(d)) fs.at(i, d) = hw_point(state);
            if (t < end_off) {
                auto [next, fc] = hw_forecast_step(state, static_cast<double>(panel.demand(i, t)));
                (void)fc;
                state = std::move(next);
            }
        }
    }
    fs.validate();
    return fs;
}

}  // namespace costcast

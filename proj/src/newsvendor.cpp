#include "costcast/newsvendor.hpp"

#include <cmath>

#include "costcast/errors.hpp"

namespace costcast {

namespace {
constexpr double kFillEps = 1e-8;
}

CostParams::CostParams(double h, double b) : holding(h), shortage(b) {
    if (!(h > 0) || !std::isfinite(h) || !(b > 0) || !std::isfinite(b))
        throw ConfigError("newsvendor costs must be strictly positive and finite");
}

double order_from_forecast(double forecast) { return forecast > 0.0 ? forecast : 0.0; }

double period_cost(double order, double demand, const CostParams& params) {
    const double over = order - demand;
    return over >= 0 ? params.holding * over : params.shortage * (-over);
}

SimOutcome simulate(const ForecastSet& fs, const SeriesPanel& panel, const CostParams& params,
                    bool round_orders) {
    if (fs.window.size() <= 0) throw CoverageError("simulation window is empty");
    if (fs.window.start_d < panel.first_d() || fs.window.end_d > panel.last_d())
        throw CoverageError("forecast window lies outside the panel");
    if (fs.n_series != panel.n_series())
        throw ReferenceError("forecast set does not match panel series count");

    SimOutcome out;
    out.n_series = fs.n_series;
    out.n_days = fs.window.size();
    out.per_day_costs.resize(fs.n_series * static_cast<size_t>(out.n_days));
    double total_cost = 0;
    for (size_t i = 0; i < fs.n_series; ++i) {
        for (int d = fs.window.start_d; d <= fs.window.end_d; ++d) {
            double q = order_from_forecast(fs.at(i, d));
            if (round_orders) q = std::round(q);
            const double demand = static_cast<double>(panel.demand_at(i, d));
            const double cost = period_cost(q, demand, params);
            out.per_day_costs[i * out.n_days + (d - fs.window.start_d)] = cost;
            total_cost += cost;
            out.total_demand += demand;
            if (q >= demand) {
                out.total_overage_units += q - demand;
            } else {
                out.total_shortage_units += demand - q;
            }
        }
    }
    const double cells = static_cast<double>(fs.n_series) * out.n_days;
    out.avg_cost = total_cost / cells;
    out.fill_rate = 1.0 - out.total_shortage_units / (out.total_demand + kFillEps);
    return out;
}

}  // namespace costcast

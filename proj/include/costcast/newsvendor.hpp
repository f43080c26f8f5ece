#pragma once

#include <vector>

#include "costcast/forecast.hpp"
#include "costcast/panel.hpp"

namespace costcast {

struct CostParams {
    double holding = 0;   // h: overage cost per unit
    double shortage = 0;  // b: underage cost per unit
    CostParams() = default;
    CostParams(double h, double b);
};

struct SimOutcome {
    double avg_cost = 0;   // mean cost per series-day
    double fill_rate = 0;  // demand-weighted, in [0,1]
    double total_overage_units = 0;
    double total_shortage_units = 0;
    double total_demand = 0;
    std::vector<double> per_day_costs;  // row-major [series][window day]
    size_t n_series = 0;
    int n_days = 0;
};

// Q = max{0, forecast}. Orders stay fractional; set round_orders in simulate
// for the sensitivity variant.
double order_from_forecast(double forecast);

// h*max(Q-D,0) + b*max(D-Q,0)
double period_cost(double order, double demand, const CostParams& params);

// Rolling single-period simulation: no carryover between days.
SimOutcome simulate(const ForecastSet& fs, const SeriesPanel& panel, const CostParams& params,
                    bool round_orders = false);

}  // namespace costcast

#pragma once

#include <vector>

#include "costcast/forecast.hpp"
#include "costcast/newsvendor.hpp"
#include "costcast/panel.hpp"

namespace costcast {

struct EchelonConfig {
    std::vector<size_t> store_set;  // series indices acting as stores
    CostParams dc_cost;             // (h_DC, b_DC)
    double store_shortage = 0;      // b_S
    double initial_dc_inventory = 0;
};

struct EchelonOutcome {
    double avg_network_cost = 0;
    double network_fill_rate = 0;  // in [0,1]
    std::vector<double> dc_inventory_trace;  // I_DC at the start of each window day
    std::vector<double> per_store_shortfall;
    double total_store_demand = 0;
};

struct DcDemand {
    std::vector<double> realized;  // D_DC per window day
    std::vector<double> forecast;  // D̂_DC per window day
    std::vector<double> dc_order;  // Q_DC = max{0, D̂_DC}
};

// Per-day sums of realized demand and store forecasts over the store set.
DcDemand aggregate_dc_demand(const ForecastSet& fs, const SeriesPanel& panel,
                             const std::vector<size_t>& store_set);

// Proportional rationing. When total requests fit into `available`, requests
// are fulfilled exactly; otherwise each store gets its proportional share.
std::vector<double> allocate(const std::vector<double>& requests, double available);

// Daily loop: DC orders against its aggregated forecast, stores request
// their clamped forecasts, scarce supply is rationed proportionally, leftover
// DC stock carries to the next day. The DC's own cost each day is the
// newsvendor cost of its available supply against aggregated realized demand.
EchelonOutcome simulate_network(const ForecastSet& fs, const SeriesPanel& panel,
                                const EchelonConfig& cfg);

}  // namespace costcast

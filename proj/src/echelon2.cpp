#include "costcast/echelon2.hpp"

#include <algorithm>
#include <cmath>

#include "costcast/errors.hpp"

namespace costcast {

namespace {
constexpr double kEps = 1e-8;

void check_config(const EchelonConfig& cfg, const SeriesPanel& panel) {
    if (cfg.store_set.empty()) throw ConfigError("echelon store_set is empty");
    for (size_t s : cfg.store_set) {
        if (s >= panel.n_series()) throw ConfigError("echelon store index out of range");
    }
    if (!(cfg.store_shortage > 0)) throw ConfigError("store shortage cost must be positive");
    if (cfg.initial_dc_inventory < 0) throw ConfigError("initial DC inventory must be >= 0");
}
}  // namespace

DcDemand aggregate_dc_demand(const ForecastSet& fs, const SeriesPanel& panel,
                             const std::vector<size_t>& store_set) {
    if (store_set.empty()) throw ConfigError("echelon store_set is empty");
    DcDemand out;
    const int w = fs.window.size();
    out.realized.assign(w, 0.0);
    out.forecast.assign(w, 0.0);
    out.dc_order.assign(w, 0.0);
    for (int k = 0; k < w; ++k) {
        const int d = fs.window.start_d + k;
        for (size_t s : store_set) {
            out.realized[k] += static_cast<double>(panel.demand_at(s, d));
            out.forecast[k] += fs.at(s, d);
        }
        out.dc_order[k] = std::max(0.0, out.forecast[k]);
    }
    return out;
}

std::vector<double> allocate(const std::vector<double>& requests, double available) {
    double total = 0;
    for (double r : requests) total += r;
    std::vector<double> out(requests.size());
    if (total <= available) {
        out = requests;  // abundant supply: ship exactly what was requested
    } else {
        for (size_t s = 0; s < requests.size(); ++s)
            out[s] = requests[s] / (total + kEps) * available;
    }
    return out;
}

EchelonOutcome simulate_network(const ForecastSet& fs, const SeriesPanel& panel,
                                const EchelonConfig& cfg) {
    if (fs.window.size() <= 0) throw CoverageError("simulation window is empty");
    if (fs.window.start_d < panel.first_d() || fs.window.end_d > panel.last_d())
        throw CoverageError("forecast window lies outside the panel");
    check_config(cfg, panel);

    const auto dc = aggregate_dc_demand(fs, panel, cfg.store_set);
    EchelonOutcome out;
    out.per_store_shortfall.assign(cfg.store_set.size(), 0.0);
    double inventory = cfg.initial_dc_inventory;
    double total_cost = 0;
    double served = 0;
    std::vector<double> requests(cfg.store_set.size());
    for (int k = 0; k < fs.window.size(); ++k) {
        const int d = fs.window.start_d + k;
        out.dc_inventory_trace.push_back(inventory);
        const double available = inventory + dc.dc_order[k];
        for (size_t j = 0; j < cfg.store_set.size(); ++j)
            requests[j] = std::max(0.0, fs.at(cfg.store_set[j], d));
        const auto fulfil = allocate(requests, available);

        double day_cost = period_cost(available, dc.realized[k], cfg.dc_cost);
        double shipped = 0;
        for (size_t j = 0; j < cfg.store_set.size(); ++j) {
            const double demand = static_cast<double>(panel.demand_at(cfg.store_set[j], d));
            const double short_units = std::max(demand - fulfil[j], 0.0);
            day_cost += cfg.store_shortage * short_units;
            out.per_store_shortfall[j] += short_units;
            served += std::min(demand, fulfil[j]);
            out.total_store_demand += demand;
            shipped += fulfil[j];
        }
        total_cost += day_cost;
        inventory = std::max(0.0, available - shipped);
    }
    out.avg_network_cost = total_cost / fs.window.size();
    out.network_fill_rate = served / (out.total_store_demand + kEps);
    return out;
}

}  // namespace costcast

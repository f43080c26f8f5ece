#include "costcast/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "costcast/errors.hpp"

namespace costcast {

double affinity_residual(const std::vector<double>& b_values, const std::vector<double>& costs) {
    const size_t n = b_values.size();
    if (n < 2) return 0.0;
    double sb = 0, sc = 0, sbb = 0, sbc = 0;
    for (size_t i = 0; i < n; ++i) {
        sb += b_values[i];
        sc += costs[i];
        sbb += b_values[i] * b_values[i];
        sbc += b_values[i] * costs[i];
    }
    const double denom = n * sbb - sb * sb;
    const double slope = (n * sbc - sb * sc) / denom;
    const double intercept = (sc - slope * sb) / n;
    double resid = 0;
    for (size_t i = 0; i < n; ++i)
        resid = std::max(resid, std::fabs(costs[i] - (intercept + slope * b_values[i])));
    return resid;
}

SimReport run_sweep(const std::vector<const ForecastSet*>& models, const SeriesPanel& panel,
                    const SweepSpec& spec) {
    if (models.empty()) throw ConfigError("sweep needs at least one model");
    if (spec.b_values.empty()) throw ConfigError("sweep b_values is empty");
    for (double b : spec.b_values) {
        if (!(b > 0)) throw ConfigError("sweep b_values must be positive");
    }
    const ForecastSet* baseline = nullptr;
    for (const auto* fs : models) {
        if (fs->window.start_d != models[0]->window.start_d ||
            fs->window.end_d != models[0]->window.end_d)
            throw ConfigError("sweep models have mismatched windows");
        if (fs->model_name == spec.baseline) baseline = fs;
    }
    if (!baseline) throw ConfigError("baseline model '" + spec.baseline + "' not in sweep");

    // Baseline outcomes per b; the b = reference_b rows carry the paper-style
    // deltas, the others keep the same-b convention.
    std::map<double, SimOutcome> baseline_by_b;
    for (double b : spec.b_values)
        baseline_by_b.emplace(b, simulate(*baseline, panel, CostParams(spec.holding, b)));

    SimReport report;
    std::map<double, std::vector<std::pair<double, std::string>>> cost_rank;
    for (const auto* fs : models) {
        const AccuracyReport acc = accuracy_report(*fs, panel);
        std::vector<double> costs;
        for (double b : spec.b_values) {
            const SimOutcome out = simulate(*fs, panel, CostParams(spec.holding, b));
            costs.push_back(out.avg_cost);
            SimReportRow row;
            row.model = fs->model_name;
            row.b = b;
            row.avg_cost = out.avg_cost;
            row.fill_rate = out.fill_rate;
            row.rmse = acc.rmse;
            row.mae = acc.mae;
            const SimOutcome& base = baseline_by_b.at(b);
            row.cost_reduction_pct = (1.0 - out.avg_cost / base.avg_cost) * 100.0;
            row.fill_gain_pp = (out.fill_rate - base.fill_rate) * 100.0;
            report.rows.push_back(row);
            cost_rank[b].emplace_back(out.avg_cost, fs->model_name);
        }
        report.affinity_residuals.emplace_back(fs->model_name,
                                               affinity_residual(spec.b_values, costs));
    }
    for (auto& [b, ranked] : cost_rank) {
        std::sort(ranked.begin(), ranked.end());
        std::vector<std::string> names;
        for (auto& [cost, name] : ranked) names.push_back(name);
        report.rankings.emplace_back(b, std::move(names));
    }
    return report;
}

}  // namespace costcast

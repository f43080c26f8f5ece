#include "costcast/features.hpp"

#include <algorithm>
#include <fstream>

#include "costcast/errors.hpp"

namespace costcast {

namespace {
constexpr int kLags[] = {1, 7, 14, 28};
constexpr int kWindows[] = {7, 14, 28};
constexpr int kWarmup = 28;
}  // namespace

int FeatureMatrix::column(const std::string& name) const {
    for (size_t i = 0; i < column_names.size(); ++i) {
        if (column_names[i] == name) return static_cast<int>(i);
    }
    return -1;
}

template <typename T>
static std::optional<double> rolling_mean_impl(std::span<const T> values, int window, size_t t) {
    if (window <= 0) return std::nullopt;
    if (t > values.size() + 1 || t <= static_cast<size_t>(window)) return std::nullopt;
    double sum = 0.0;
    for (size_t i = t - window - 1; i < t - 1; ++i) sum += static_cast<double>(values[i]);
    return sum / window;
}

std::optional<double> rolling_mean(std::span<const std::int64_t> values, int window, size_t t) {
    return rolling_mean_impl(values, window, t);
}
std::optional<double> rolling_mean(std::span<const double> values, int window, size_t t) {
    return rolling_mean_impl(values, window, t);
}

FeatureMatrix build_features(const SeriesPanel& panel) {
    FeatureMatrix fm;
    fm.n_series = panel.n_series();
    fm.n_days = panel.n_days();
    fm.first_d = panel.first_d();
    for (int lag : kLags) fm.column_names.push_back("lag_" + std::to_string(lag));
    for (int w : kWindows) fm.column_names.push_back("rollmean_" + std::to_string(w));
    fm.column_names.push_back("weekday");
    fm.column_names.push_back("month");
    for (int w = 1; w <= 7; ++w) fm.column_names.push_back("wd_" + std::to_string(w));
    for (int m = 1; m <= 12; ++m) fm.column_names.push_back("mo_" + std::to_string(m));
    for (const auto& name : panel.event_names()) fm.column_names.push_back("event_" + name);
    fm.column_names.push_back("snap");

    const size_t cols = fm.n_cols();
    fm.values.assign(fm.n_series * fm.n_days * cols, 0.0);
    fm.valid.assign(fm.n_series * fm.n_days, 0);

    const size_t n_events = panel.event_names().size();
    for (size_t i = 0; i < fm.n_series; ++i) {
        const std::string& state = panel.keys()[i].state_id;
        // Running sums per window: cheaper than re-summing each day.
        double wsum[3] = {0, 0, 0};
        for (size_t t = 0; t < fm.n_days; ++t) {
            double* row = fm.values.data() + fm.row(i, t) * cols;
            size_t c = 0;
            bool ok = t >= static_cast<size_t>(kWarmup);
            for (int lag : kLags) {
                row[c++] = t >= static_cast<size_t>(lag)
                               ? static_cast<double>(panel.demand(i, t - lag))
                               : 0.0;
            }
            for (size_t w = 0; w < 3; ++w) {
                row[c++] = t >= static_cast<size_t>(kWindows[w]) ? wsum[w] / kWindows[w] : 0.0;
            }
            const CalendarDay& day = panel.days()[t];
            row[c++] = day.weekday;
            row[c++] = day.month;
            if (day.weekday >= 1 && day.weekday <= 7) row[c + day.weekday - 1] = 1.0;
            c += 7;
            if (day.month >= 1 && day.month <= 12) row[c + day.month - 1] = 1.0;
            c += 12;
            for (int ev : day.event_ids) row[c + ev] = 1.0;
            c += n_events;
            row[c++] = day.snap_for(state) ? 1.0 : 0.0;
            fm.valid[fm.row(i, t)] = ok ? 1 : 0;

            double y = static_cast<double>(panel.demand(i, t));
            for (size_t w = 0; w < 3; ++w) {
                wsum[w] += y;
                if (t + 1 > static_cast<size_t>(kWindows[w]))
                    wsum[w] -= static_cast<double>(panel.demand(i, t + 1 - kWindows[w] - 1));
            }
        }
    }
    return fm;
}

void write_features_csv(const FeatureMatrix& fm, const SeriesPanel& panel,
                        const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "item_id,dept_id,store_id,state_id,d,target";
    for (const auto& name : fm.column_names) out << ',' << name;
    out << "\n";
    char buf[64];
    for (size_t i = 0; i < fm.n_series; ++i) {
        const SeriesKey& k = panel.keys()[i];
        for (size_t t = 0; t < fm.n_days; ++t) {
            if (!fm.is_valid(i, t)) continue;
            out << k.item_id << ',' << k.dept_id << ',' << k.store_id << ',' << k.state_id << ",d_"
                << (fm.first_d + static_cast<int>(t)) << ',' << panel.demand(i, t);
            auto row = fm.row_values(i, t);
            for (double v : row) {
                std::snprintf(buf, sizeof(buf), "%.10g", v);
                out << ',' << buf;
            }
            out << "\n";
        }
    }
}

}  // namespace costcast

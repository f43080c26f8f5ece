#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace costcast {

struct SeriesKey {
    std::string item_id;
    std::string dept_id;
    std::string store_id;
    std::string state_id;

    auto tie() const { return std::tie(item_id, dept_id, store_id, state_id); }
    bool operator==(const SeriesKey& o) const { return tie() == o.tie(); }
    bool operator<(const SeriesKey& o) const { return tie() < o.tie(); }
    std::string str() const { return item_id + "/" + dept_id + "/" + store_id + "/" + state_id; }
};

struct CalendarDay {
    int d_index = 0;       // 1-based, matches the `d` column
    std::string date;      // ISO date string from the calendar file
    int weekday = 0;       // 1..7 (the `wday` column)
    int month = 0;         // 1..12
    std::vector<int> event_ids;  // indices into SeriesPanel::event_names
    bool snap_ca = false;
    bool snap_tx = false;
    bool snap_wi = false;

    bool snap_for(const std::string& state_id) const {
        if (state_id == "CA") return snap_ca;
        if (state_id == "TX") return snap_tx;
        if (state_id == "WI") return snap_wi;
        return false;
    }
};

// Column=value predicate applied to the sales file's id columns.
using Filter = std::vector<std::pair<std::string, std::string>>;

// Dense panel of daily demand: N series sharing one gap-free day axis.
// Immutable after construction.
class SeriesPanel {
public:
    SeriesPanel() = default;
    SeriesPanel(std::vector<SeriesKey> keys, std::vector<CalendarDay> days,
                std::vector<std::string> event_names, std::vector<std::int64_t> demand);

    size_t n_series() const { return keys_.size(); }
    size_t n_days() const { return days_.size(); }
    int first_d() const { return days_.front().d_index; }
    int last_d() const { return days_.back().d_index; }

    const std::vector<SeriesKey>& keys() const { return keys_; }
    const std::vector<CalendarDay>& days() const { return days_; }
    const std::vector<std::string>& event_names() const { return event_names_; }

    // Demand by series index and 0-based day offset.
    std::int64_t demand(size_t series, size_t day) const {
        return demand_[series * days_.size() + day];
    }
    // Demand by d_index.
    std::int64_t demand_at(size_t series, int d_index) const {
        return demand(series, static_cast<size_t>(d_index - first_d()));
    }
    size_t day_offset(int d_index) const { return static_cast<size_t>(d_index - first_d()); }

    int series_index(const SeriesKey& key) const;  // -1 if absent

    // Copy restricted to days d <= last_d_index. Used for anti-leakage checks.
    SeriesPanel truncated(int last_d_index) const;

private:
    std::vector<SeriesKey> keys_;
    std::vector<CalendarDay> days_;
    std::vector<std::string> event_names_;
    std::vector<std::int64_t> demand_;  // row-major [series][day]
};

// Chronological split boundaries, as d_index values.
struct SplitSpec {
    int train_end = 0;
    int valid_end = 0;
    int test_end = 0;
};

// Loads M5-format sales + calendar CSVs, keeping series matching the filter.
// Series are ordered by ascending key so panel layout is independent of file
// row order.
SeriesPanel load_panel(const std::string& sales_path, const std::string& calendar_path,
                       const Filter& filter);

// In-memory refilter; applying the same filter twice is a no-op.
SeriesPanel filter_panel(const SeriesPanel& panel, const Filter& filter);

// Writes the panel back to the wide M5 sales schema, one row per series in
// panel order. load_panel on the output (with the same calendar) round-trips.
void write_sales_csv(const SeriesPanel& panel, const std::string& path);

// test = last test_days, validation = the valid_days before, train = rest.
// Requires room for at least one trainable row after the 28-day feature warm-up.
SplitSpec make_splits(const SeriesPanel& panel, int valid_days = 28, int test_days = 28);

}  // namespace costcast

#include "costcast/panel.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "costcast/csv.hpp"
#include "costcast/errors.hpp"

namespace costcast {

namespace {

constexpr int kMaxFeatureLag = 28;

bool parse_demand_cell(const std::string& s, std::int64_t& out) {
    if (s.empty()) return false;
    std::int64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    out = v;
    return true;
}

int parse_d_label(const std::string& s) {
    if (s.size() < 3 || s[0] != 'd' || s[1] != '_') return -1;
    int v = 0;
    for (size_t i = 2; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return -1;
        v = v * 10 + (s[i] - '0');
    }
    return v;
}

}  // namespace

SeriesPanel::SeriesPanel(std::vector<SeriesKey> keys, std::vector<CalendarDay> days,
                         std::vector<std::string> event_names, std::vector<std::int64_t> demand)
    : keys_(std::move(keys)),
      days_(std::move(days)),
      event_names_(std::move(event_names)),
      demand_(std::move(demand)) {
    if (keys_.empty() || days_.empty()) throw FormatError("empty panel");
    if (demand_.size() != keys_.size() * days_.size())
        throw FormatError("demand matrix does not match keys x days");
    for (size_t i = 1; i < days_.size(); ++i) {
        if (days_[i].d_index != days_[i - 1].d_index + 1)
            throw CoverageError("day axis has a gap at d_" + std::to_string(days_[i - 1].d_index + 1));
    }
    for (auto v : demand_) {
        if (v < 0) throw ParseError("negative demand value");
    }
}

int SeriesPanel::series_index(const SeriesKey& key) const {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it == keys_.end() || !(*it == key)) return -1;
    return static_cast<int>(it - keys_.begin());
}

SeriesPanel SeriesPanel::truncated(int last_d_index) const {
    size_t t = day_offset(last_d_index) + 1;
    std::vector<CalendarDay> days(days_.begin(), days_.begin() + t);
    std::vector<std::int64_t> demand;
    demand.reserve(keys_.size() * t);
    for (size_t i = 0; i < keys_.size(); ++i) {
        for (size_t j = 0; j < t; ++j) demand.push_back(this->demand(i, j));
    }
    return SeriesPanel(keys_, std::move(days), event_names_, std::move(demand));
}

namespace {

struct CalendarData {
    std::vector<CalendarDay> days;  // d_1.. in order
    std::vector<std::string> event_names;
};

CalendarData load_calendar(const std::string& path) {
    csv::Table t = csv::read_file(path);
    int c_date = t.column("date");
    int c_wday = t.column("wday");
    int c_month = t.column("month");
    int c_d = t.column("d");
    int c_ev1 = t.column("event_name_1");
    int c_ev2 = t.column("event_name_2");
    int c_ca = t.column("snap_CA");
    int c_tx = t.column("snap_TX");
    int c_wi = t.column("snap_WI");
    if (c_date < 0 || c_wday < 0 || c_month < 0 || c_d < 0)
        throw FormatError("calendar missing required columns (date/wday/month/d)");

    // Two passes: collect event names first so flag ids are sorted and stable.
    std::set<std::string> names;
    for (const auto& row : t.rows) {
        if (c_ev1 >= 0 && !row[c_ev1].empty()) names.insert(row[c_ev1]);
        if (c_ev2 >= 0 && !row[c_ev2].empty()) names.insert(row[c_ev2]);
    }
    CalendarData out;
    out.event_names.assign(names.begin(), names.end());
    std::map<std::string, int> name_id;
    for (size_t i = 0; i < out.event_names.size(); ++i) name_id[out.event_names[i]] = static_cast<int>(i);

    for (const auto& row : t.rows) {
        CalendarDay day;
        day.d_index = parse_d_label(row[c_d]);
        if (day.d_index <= 0) throw ParseError("calendar d column value '" + row[c_d] + "'");
        day.date = row[c_date];
        try {
            day.weekday = std::stoi(row[c_wday]);
            day.month = std::stoi(row[c_month]);
        } catch (const std::exception&) {
            throw ParseError("calendar row " + row[c_d] + ": non-numeric wday/month");
        }
        if (c_ev1 >= 0 && !row[c_ev1].empty()) day.event_ids.push_back(name_id[row[c_ev1]]);
        if (c_ev2 >= 0 && !row[c_ev2].empty()) day.event_ids.push_back(name_id[row[c_ev2]]);
        std::sort(day.event_ids.begin(), day.event_ids.end());
        day.event_ids.erase(std::unique(day.event_ids.begin(), day.event_ids.end()),
                            day.event_ids.end());
        day.snap_ca = c_ca >= 0 && row[c_ca] == "1";
        day.snap_tx = c_tx >= 0 && row[c_tx] == "1";
        day.snap_wi = c_wi >= 0 && row[c_wi] == "1";
        out.days.push_back(std::move(day));
    }
    std::sort(out.days.begin(), out.days.end(),
              [](const CalendarDay& a, const CalendarDay& b) { return a.d_index < b.d_index; });
    for (size_t i = 0; i < out.days.size(); ++i) {
        if (out.days[i].d_index != static_cast<int>(i) + 1)
            throw CoverageError("calendar is missing d_" + std::to_string(i + 1));
    }
    return out;
}

bool row_matches(const csv::Table& t, const std::vector<std::string>& row, const Filter& filter) {
    for (const auto& [col, value] : filter) {
        int c = t.column(col);
        if (c < 0) throw ConfigError("filter column '" + col + "' not in sales file");
        if (row[c] != value) return false;
    }
    return true;
}

}  // namespace

SeriesPanel load_panel(const std::string& sales_path, const std::string& calendar_path,
                       const Filter& filter) {
    csv::Table sales = csv::read_file(sales_path);
    for (const char* col : {"item_id", "dept_id", "store_id", "state_id"}) {
        if (sales.column(col) < 0) throw FormatError("sales file missing column " + std::string(col));
    }

    // Map d_k columns; they must be exactly d_1..d_T with no gaps or repeats.
    std::map<int, int> d_cols;
    int max_d = 0;
    for (size_t c = 0; c < sales.header.size(); ++c) {
        int d = parse_d_label(sales.header[c]);
        if (d > 0) {
            if (d_cols.count(d))
                throw FormatError("duplicate column d_" + std::to_string(d) + " in sales file");
            d_cols[d] = static_cast<int>(c);
            max_d = std::max(max_d, d);
        }
    }
    if (d_cols.empty()) throw FormatError("sales file has no d_ columns");
    for (int d = 1; d <= max_d; ++d) {
        if (!d_cols.count(d)) throw FormatError("missing column d_" + std::to_string(d) + " in sales file");
    }

    CalendarData cal = load_calendar(calendar_path);
    if (static_cast<int>(cal.days.size()) < max_d)
        throw CoverageError("calendar covers " + std::to_string(cal.days.size()) +
                            " days but sales horizon is " + std::to_string(max_d));
    cal.days.resize(max_d);

    int c_item = sales.column("item_id"), c_dept = sales.column("dept_id");
    int c_store = sales.column("store_id"), c_state = sales.column("state_id");

    std::vector<std::pair<SeriesKey, const std::vector<std::string>*>> selected;
    for (const auto& row : sales.rows) {
        if (!row_matches(sales, row, filter)) continue;
        SeriesKey key{row[c_item], row[c_dept], row[c_store], row[c_state]};
        if (key.item_id.empty() || key.dept_id.empty() || key.store_id.empty() ||
            key.state_id.empty())
            throw ParseError("empty id field in sales row for " + key.str());
        selected.emplace_back(std::move(key), &row);
    }
    if (selected.empty()) throw CoverageError("filter matched no series");
    std::sort(selected.begin(), selected.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < selected.size(); ++i) {
        if (selected[i].first == selected[i - 1].first)
            throw FormatError("duplicate series key " + selected[i].first.str());
    }

    std::vector<SeriesKey> keys;
    std::vector<std::int64_t> demand;
    keys.reserve(selected.size());
    demand.reserve(selected.size() * max_d);
    for (const auto& [key, row] : selected) {
        keys.push_back(key);
        for (int d = 1; d <= max_d; ++d) {
            std::int64_t v;
            if (!parse_demand_cell((*row)[d_cols[d]], v))
                throw ParseError("series " + key.str() + ", column d_" + std::to_string(d) +
                                 ": non-numeric demand '" + (*row)[d_cols[d]] + "'");
            demand.push_back(v);
        }
    }
    return SeriesPanel(std::move(keys), std::move(cal.days), std::move(cal.event_names),
                       std::move(demand));
}

SeriesPanel filter_panel(const SeriesPanel& panel, const Filter& filter) {
    std::vector<size_t> kept;
    for (size_t i = 0; i < panel.n_series(); ++i) {
        const SeriesKey& k = panel.keys()[i];
        bool ok = true;
        for (const auto& [col, value] : filter) {
            const std::string* field = nullptr;
            if (col == "item_id") field = &k.item_id;
            else if (col == "dept_id") field = &k.dept_id;
            else if (col == "store_id") field = &k.store_id;
            else if (col == "state_id") field = &k.state_id;
            else throw ConfigError("filter column '" + col + "' not a panel key column");
            if (*field != value) { ok = false; break; }
        }
        if (ok) kept.push_back(i);
    }
    if (kept.empty()) throw CoverageError("filter matched no series");
    std::vector<SeriesKey> keys;
    std::vector<std::int64_t> demand;
    for (size_t i : kept) {
        keys.push_back(panel.keys()[i]);
        for (size_t t = 0; t < panel.n_days(); ++t) demand.push_back(panel.demand(i, t));
    }
    return SeriesPanel(std::move(keys), panel.days(), panel.event_names(), std::move(demand));
}

void write_sales_csv(const SeriesPanel& panel, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "id,item_id,dept_id,cat_id,store_id,state_id";
    for (int d = panel.first_d(); d <= panel.last_d(); ++d) out << ",d_" << d;
    out << "\n";
    for (size_t i = 0; i < panel.n_series(); ++i) {
        const SeriesKey& k = panel.keys()[i];
        std::string cat = k.dept_id.substr(0, k.dept_id.find('_'));
        out << k.item_id << '_' << k.store_id << "_validation," << k.item_id << ',' << k.dept_id
            << ',' << cat << ',' << k.store_id << ',' << k.state_id;
        for (size_t t = 0; t < panel.n_days(); ++t) out << ',' << panel.demand(i, t);
        out << "\n";
    }
}

SplitSpec make_splits(const SeriesPanel& panel, int valid_days, int test_days) {
    if (valid_days <= 0 || test_days <= 0) throw ConfigError("split window sizes must be positive");
    int horizon = static_cast<int>(panel.n_days());
    int needed = valid_days + test_days + kMaxFeatureLag + 1;
    if (horizon < needed)
        throw InsufficientHistoryError("panel horizon " + std::to_string(horizon) +
                                       " < required " + std::to_string(needed));
    SplitSpec s;
    s.test_end = panel.last_d();
    s.valid_end = s.test_end - test_days;
    s.train_end = s.valid_end - valid_days;
    return s;
}

}  // namespace costcast

#include "costcast/forecast_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "costcast/csv.hpp"
#include "costcast/errors.hpp"

namespace costcast {

void export_forecasts(const ForecastSet& fs, const SeriesPanel& panel, const std::string& path) {
    if (fs.n_series != panel.n_series())
        throw ReferenceError("forecast set does not match panel series count");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "# model=" << fs.model_name << "\n";
    out << "# split=" << split_name(fs.split) << "\n";
    out << "item_id,dept_id,store_id,state_id,d,forecast\n";
    if (fs.window.size() <= 0) return;  // header-only file for an empty window
    char buf[64];
    // Panel keys are already sorted ascending, so panel order is key order.
    for (size_t i = 0; i < panel.n_series(); ++i) {
        const SeriesKey& k = panel.keys()[i];
        for (int d = fs.window.start_d; d <= fs.window.end_d; ++d) {
            std::snprintf(buf, sizeof(buf), "%.17g", fs.at(i, d));
            out << k.item_id << ',' << k.dept_id << ',' << k.store_id << ',' << k.state_id << ",d_"
                << d << ',' << buf << "\n";
        }
    }
}

ForecastSet import_forecasts(const std::string& path, const SeriesPanel& panel, DayRange window) {
    std::vector<std::string> comments;
    csv::Table t = csv::read_file(path, &comments);
    std::string model_name = "external";
    Split split = Split::Test;
    for (const auto& line : comments) {
        if (line.rfind("# model=", 0) == 0) model_name = line.substr(8);
        if (line.rfind("# split=", 0) == 0) split = split_from_name(line.substr(8));
    }
    int c_item = t.column("item_id"), c_dept = t.column("dept_id");
    int c_store = t.column("store_id"), c_state = t.column("state_id");
    int c_d = t.column("d"), c_fc = t.column("forecast");
    if (c_item < 0 || c_dept < 0 || c_store < 0 || c_state < 0 || c_d < 0 || c_fc < 0)
        throw FormatError("forecast file " + path + " missing required columns");

    ForecastSet fs;
    fs.model_name = model_name;
    fs.split = split;
    fs.window = window;
    fs.n_series = panel.n_series();
    fs.values.assign(fs.n_series * static_cast<size_t>(window.size()),
                     std::numeric_limits<double>::quiet_NaN());
    std::vector<uint8_t> seen(fs.values.size(), 0);

    for (const auto& row : t.rows) {
        SeriesKey key{row[c_item], row[c_dept], row[c_store], row[c_state]};
        int series = panel.series_index(key);
        if (series < 0) throw ReferenceError("unknown series key " + key.str() + " in " + path);
        const std::string& d_str = row[c_d];
        int d = 0;
        if (d_str.rfind("d_", 0) == 0) {
            d = std::atoi(d_str.c_str() + 2);
        } else {
            d = std::atoi(d_str.c_str());
        }
        if (d <= 0) throw ParseError("bad d value '" + d_str + "' in " + path);
        if (!window.contains(d)) continue;  // rows outside the window are ignored
        double v = 0;
        try {
            size_t pos = 0;
            v = std::stod(row[c_fc], &pos);
            if (pos != row[c_fc].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError("series " + key.str() + ", day d_" + std::to_string(d) +
                             ": bad forecast '" + row[c_fc] + "'");
        }
        if (!std::isfinite(v))
            throw ParseError("series " + key.str() + ", day d_" + std::to_string(d) +
                             ": non-finite forecast");
        size_t cell = static_cast<size_t>(series) * window.size() + (d - window.start_d);
        if (seen[cell])
            throw CoverageError("duplicate cell for series " + key.str() + ", day d_" +
                                std::to_string(d));
        seen[cell] = 1;
        fs.values[cell] = v;
    }
    for (size_t i = 0; i < panel.n_series(); ++i) {
        for (int d = window.start_d; d <= window.end_d; ++d) {
            size_t cell = i * window.size() + (d - window.start_d);
            if (!seen[cell])
                throw CoverageError("missing forecast for series " + panel.keys()[i].str() +
                                    ", day d_" + std::to_string(d));
        }
    }
    fs.validate();
    return fs;
}

}  // namespace costcast

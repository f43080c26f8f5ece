#pragma once

#include <string>

#include "costcast/forecast.hpp"
#include "costcast/panel.hpp"

namespace costcast {

// Forecast CSV format:
//   # model=<name>
//   # split=<validation|test>
//   item_id,dept_id,store_id,state_id,d,forecast
// Body covers the full cartesian product of panel series x window days, one
// row per cell, ordered by series key ascending then d_index. Values are
// real-valued and unrounded; the simulator owns clamping policy.

// Deterministic export; re-import yields an equal ForecastSet.
void export_forecasts(const ForecastSet& fs, const SeriesPanel& panel, const std::string& path);

// Validated import. Keys must resolve against the panel, every (series, day)
// cell in the window must be present exactly once, values must be finite.
ForecastSet import_forecasts(const std::string& path, const SeriesPanel& panel, DayRange window);

}  // namespace costcast

#pragma once

#include <string>
#include <vector>

namespace costcast::csv {

// Splits one CSV line on commas. Fields are taken verbatim; the M5 files do
// not quote commas, but simple double-quoted fields are handled anyway.
std::vector<std::string> split_line(const std::string& line);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a header column, -1 if absent.
    int column(const std::string& name) const;
};

// Reads a whole CSV file. Skips blank lines; lines starting with '#' are
// returned separately as comments (used by the forecast file format).
Table read_file(const std::string& path, std::vector<std::string>* comments = nullptr);

std::string join(const std::vector<std::string>& fields);

}  // namespace costcast::csv

#pragma once

#include <stdexcept>
#include <string>

namespace costcast {

// Malformed input file (bad header, duplicate/missing columns).
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& msg) : std::runtime_error("format error: " + msg) {}
};

// Input covers less than the required horizon or omits required cells.
class CoverageError : public std::runtime_error {
public:
    explicit CoverageError(const std::string& msg) : std::runtime_error("coverage error: " + msg) {}
};

// A cell failed to parse; message names row and column.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error("parse error: " + msg) {}
};

// A key in one input does not resolve against another.
class ReferenceError : public std::runtime_error {
public:
    explicit ReferenceError(const std::string& msg) : std::runtime_error("reference error: " + msg) {}
};

// Invalid run configuration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error("config error: " + msg) {}
};

// Not enough history for a fit or a split.
class InsufficientHistoryError : public std::runtime_error {
public:
    explicit InsufficientHistoryError(const std::string& msg)
        : std::runtime_error("insufficient history: " + msg) {}
};

// A forecast window overlaps the data a model was fitted on.
class LeakageError : public std::runtime_error {
public:
    explicit LeakageError(const std::string& msg) : std::runtime_error("leakage error: " + msg) {}
};

}  // namespace costcast

#pragma once

#include <stdexcept>
#include <string>

namespace bwmeta {

/// Invalid or inconsistent configuration (bad field values, unreadable config files).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Missing or malformed data on disk (datasets, checkpoints, sample ids).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure at run time (divergence, non-finite state, eigen-solve failure).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace bwmeta

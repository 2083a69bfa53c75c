#pragma once

#include <stdexcept>
#include <string>

namespace clubdrf {

/// Invalid parameters or flags (bad k, tree count, fraction, ...). CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or unusable input data (parse errors, schema violations, IO). CLI exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// API contract violation (length mismatch, empty voting set). CLI exit code 3.
class UsageError : public std::logic_error {
public:
    explicit UsageError(const std::string& what) : std::logic_error(what) {}
};

} // namespace clubdrf

#pragma once
#include <stdexcept>
#include <string>

namespace netepi {

// Error categories map onto the CLI exit codes: usage/config -> 1, data -> 2,
// anything else -> 3.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};
struct DataError : std::runtime_error {
    explicit DataError(const std::string& m) : std::runtime_error(m) {}
};

} // namespace netepi

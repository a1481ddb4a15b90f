#pragma once

#include <stdexcept>
#include <string>

namespace dyadloop {

// Invalid configuration, profiles, or CLI usage. The CLI maps this to exit 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Failure while executing runs, judging, or fitting. The CLI maps this to exit 1.
struct RunError : std::runtime_error {
    explicit RunError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace dyadloop

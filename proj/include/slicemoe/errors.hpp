#pragma once

#include <stdexcept>
#include <string>

namespace slicemoe {

// Invalid configuration or input. CLI maps this to exit code 2.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Capacity violation while a simulation is running (mis-sized config,
// pinned set covering the whole cache, ...). CLI maps this to exit code 3.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace slicemoe

#pragma once

#include <stdexcept>
#include <string>

namespace altdes {

// A request exceeded a configured cap (enumeration size, series order, ...).
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A floating-point routine failed to converge or to certify its result.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace altdes

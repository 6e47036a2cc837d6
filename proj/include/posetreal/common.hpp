#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace posetreal {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

// Declared cover relation contains a directed cycle.
struct CycleError : ValidationError {
    CycleError(std::string msg, std::vector<int> witness)
        : ValidationError(std::move(msg)), cycle(std::move(witness)) {}
    std::vector<int> cycle;
};

struct CapExceeded : Error {
    using Error::Error;
};

struct TimeoutError : Error {
    using Error::Error;
};

} // namespace posetreal

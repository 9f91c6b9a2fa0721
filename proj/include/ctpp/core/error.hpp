#pragma once

#include <stdexcept>
#include <string>

namespace ctpp {

// Base for all domain errors; the CLI maps these to exit code 1,
// IoError to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct TaxonomyError : Error {
    using Error::Error;
};

struct ArgumentError : Error {
    using Error::Error;
};

struct SimulationError : Error {
    using Error::Error;
};

struct EstimationError : Error {
    using Error::Error;
};

struct TrainError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace ctpp

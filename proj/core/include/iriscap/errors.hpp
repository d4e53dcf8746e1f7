#pragma once

#include <stdexcept>
#include <string>

namespace iriscap {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The AR model has a characteristic root on or outside the stability margin.
class UnstableModelError : public Error {
public:
    using Error::Error;
};

/// Constant, all-zero, or perfectly predictable input signal.
class DegenerateSignalError : public Error {
public:
    using Error::Error;
};

/// Requested model order is incompatible with the data length.
class InvalidOrderError : public Error {
public:
    using Error::Error;
};

/// Two spectra or periodograms live on different frequency grids.
class GridMismatchError : public Error {
public:
    using Error::Error;
};

/// Not enough samples/scores to produce a meaningful estimate.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// A bound evaluates to infinity (e.g. Daugman bound at FMR = 0).
class UnboundedPopulationError : public Error {
public:
    using Error::Error;
};

/// File or serialization failure.
class IoError : public Error {
public:
    using Error::Error;
};

/// Pipeline stage failure; carries the name of the failing stage.
class StageError : public Error {
public:
    StageError(std::string stage, const std::string& what)
        : Error("[" + stage + "] " + what), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace iriscap

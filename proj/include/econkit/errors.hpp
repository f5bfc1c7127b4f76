#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace econkit {

/// Base class for all econkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Problems with the input data itself (bad files, malformed series,
/// schema violations). CLI maps these to exit code 2.
class DataError : public Error {
public:
    using Error::Error;
};

/// Numerical / model-level failures (rank deficiency, degenerate
/// inference, out-of-range configuration). CLI maps these to exit code 3.
class ModelError : public Error {
public:
    using Error::Error;
};

// --- series / frame ---

class SeriesTooShort : public DataError {
public:
    explicit SeriesTooShort(const std::string& msg) : DataError(msg) {}
};

class NonPositiveValue : public DataError {
public:
    NonPositiveValue(std::size_t index, const std::string& msg)
        : DataError(msg), index(index) {}
    std::size_t index;
};

class NoOverlap : public DataError {
public:
    using DataError::DataError;
};

class DuplicateName : public DataError {
public:
    explicit DuplicateName(const std::string& name)
        : DataError("duplicate column name: " + name), name(name) {}
    std::string name;
};

// --- ingest ---

class FileNotFound : public DataError {
public:
    explicit FileNotFound(const std::string& path)
        : DataError("file not found: " + path), path(path) {}
    std::string path;
};

class MissingColumn : public DataError {
public:
    explicit MissingColumn(const std::string& name)
        : DataError("missing column: " + name), name(name) {}
    std::string name;
};

class BadPeriodFormat : public DataError {
public:
    BadPeriodFormat(std::size_t row, const std::string& text)
        : DataError("row " + std::to_string(row) + ": bad period \"" + text + "\""),
          row(row) {}
    std::size_t row;
};

class NonNumericCell : public DataError {
public:
    NonNumericCell(std::size_t row, const std::string& column, const std::string& text)
        : DataError("row " + std::to_string(row) + ", column " + column +
                    ": non-numeric cell \"" + text + "\""),
          row(row), column(column) {}
    std::size_t row;
    std::string column;
};

class GapInPeriods : public DataError {
public:
    explicit GapInPeriods(const std::string& period)
        : DataError("gap in periods: missing " + period), period(period) {}
    std::string period;
};

class DuplicatePeriod : public DataError {
public:
    explicit DuplicatePeriod(const std::string& period)
        : DataError("duplicate period: " + period), period(period) {}
    std::string period;
};

class EmptyFrame : public DataError {
public:
    using DataError::DataError;
};

// --- regression / covariance ---

class TooFewObservations : public ModelError {
public:
    using ModelError::ModelError;
};

class RankDeficient : public ModelError {
public:
    using ModelError::ModelError;
};

class ZeroVariance : public ModelError {
public:
    explicit ZeroVariance(const std::string& name)
        : ModelError("zero-variance column: " + name), name(name) {}
    std::string name;
};

class ZeroStandardError : public ModelError {
public:
    explicit ZeroStandardError(std::size_t index)
        : ModelError("zero standard error for coefficient " + std::to_string(index)),
          index(index) {}
    std::size_t index;
};

class DegenerateDependent : public ModelError {
public:
    using ModelError::ModelError;
};

class LagOutOfRange : public ModelError {
public:
    using ModelError::ModelError;
};

class LagTooLarge : public ModelError {
public:
    using ModelError::ModelError;
};

class DimensionMismatch : public ModelError {
public:
    using ModelError::ModelError;
};

class NegativeDiagonal : public ModelError {
public:
    NegativeDiagonal(std::size_t index, double value)
        : ModelError("negative covariance diagonal at " + std::to_string(index) +
                     ": " + std::to_string(value)),
          index(index), value(value) {}
    std::size_t index;
    double value;
};

// --- unit root / normality ---

class SampleTooSmall : public ModelError {
public:
    using ModelError::ModelError;
};

class SampleTooLarge : public ModelError {
public:
    using ModelError::ModelError;
};

}  // namespace econkit

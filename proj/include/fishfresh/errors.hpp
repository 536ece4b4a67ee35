#pragma once

#include <stdexcept>
#include <string>

namespace fishfresh {

// Error categories used across the toolkit. Callers that need to map a
// failure to a CLI exit code catch by category, not by message.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DatasetError : std::runtime_error {
    explicit DatasetError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ExtractionError : std::runtime_error {
    explicit ExtractionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SegmentationError : std::runtime_error {
    explicit SegmentationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct TrainingError : std::runtime_error {
    explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad arguments (out-of-range fractions, dimension mismatches, unknown
// hyperparameters) reuse std::invalid_argument.
using ArgumentError = std::invalid_argument;

}  // namespace fishfresh

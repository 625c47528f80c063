#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace postergen {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bundle directory missing, malformed manifest, undecodable image.
class InputError : public Error {
    using Error::Error;
};

/// Bad or out-of-range configuration value, missing credential.
class ConfigError : public Error {
    using Error::Error;
};

/// Network or HTTP failure in live gateway mode.
class TransportError : public Error {
    using Error::Error;
};

/// Fixture-mode lookup miss. Never falls through to a live call.
class FixtureError : public Error {
    using Error::Error;
};

/// Response failed JSON parsing or schema validation after the retry budget.
class SchemaError : public Error {
    using Error::Error;
};

/// Deterministic post-validation of an otherwise well-formed response failed.
class ValidationError : public Error {
    using Error::Error;
};

/// Storyboard construction failed (missing key visual, persistent violations).
class CurationError : public Error {
    using Error::Error;
};

/// Column balancing exhausted its iteration budget with overflow remaining.
class BalanceError : public Error {
    using Error::Error;
};

/// Poster assembly ended with a broken geometric invariant.
class AssemblyError : public Error {
    using Error::Error;
};

/// Output serialization failed (image encoding, archive writing).
class RenderError : public Error {
    using Error::Error;
};

/// Palette derivation could not satisfy a contrast requirement.
class PaletteError : public Error {
    using Error::Error;
};

/// Judge score aggregation over inconsistent dimension sets.
class AggregationError : public Error {
    using Error::Error;
};

/// Collects non-fatal warnings emitted along a pipeline run.
struct Diagnostics {
    std::vector<std::string> warnings;

    void warn(std::string msg) { warnings.push_back(std::move(msg)); }
};

} // namespace postergen

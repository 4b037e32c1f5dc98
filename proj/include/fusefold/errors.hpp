#pragma once

#include <stdexcept>
#include <string>

namespace fusefold {

// Base for every library error.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed files, out-of-range flags, mismatched shapes.
// The CLI maps these to exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

struct ShapeError : ValidationError {
    using ValidationError::ValidationError;
};

struct ParseError : ValidationError {
    using ValidationError::ValidationError;
};

struct SchemaError : ValidationError {
    using ValidationError::ValidationError;
};

struct FormatError : ValidationError {
    using ValidationError::ValidationError;
};

struct ConfigError : ValidationError {
    using ValidationError::ValidationError;
};

struct DomainError : Error {
    using Error::Error;
};

// Torsion undefined: collinear or coincident points.
struct DegenerateGeometryError : DomainError {
    using DomainError::DomainError;
};

// Statistical test cannot be computed (e.g. zero-variance differences).
struct DegenerateTestError : DomainError {
    using DomainError::DomainError;
};

}  // namespace fusefold

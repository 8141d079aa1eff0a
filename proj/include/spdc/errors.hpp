#pragma once

#include <stdexcept>
#include <string>

namespace spdc {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid physical input (non-positive wavelength, degenerate quadratic form, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Wavelength outside a material's validity window, or a curve that does not
/// span enough of the feature being measured.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Config or material file failed to parse or validate.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A numerical consistency check failed (imaginary residual, SVD breakdown).
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Grid too coarse for the requested computation.
class ResolutionError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Mismatched grid shapes or axes.
class ShapeError : public Error {
public:
    using Error::Error;
};

} // namespace spdc

#pragma once

#include <stdexcept>
#include <string>

namespace gsw {

/// Invalid parameter or malformed request (CLI maps these to exit code 1).
struct ParameterError : std::invalid_argument {
    explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Numerical precondition violated (CLI maps these to exit code 2).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// File or stream failure (CLI maps these to exit code 3).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A scale places spectral support beyond the representable frequency band.
struct AliasingError : NumericalError {
    int scale_index;
    double scale_value;
    AliasingError(int k, double a, const std::string& msg)
        : NumericalError(msg), scale_index(k), scale_value(a) {}
};

/// The wavelet spectrum vanishes along some ray from the origin.
struct DegenerateWaveletError : NumericalError {
    explicit DegenerateWaveletError(const std::string& msg) : NumericalError(msg) {}
};

/// Requested derivative/moment order exceeds what the lattice can resolve.
struct ResolutionError : NumericalError {
    explicit ResolutionError(const std::string& msg) : NumericalError(msg) {}
};

} // namespace gsw

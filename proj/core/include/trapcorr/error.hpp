#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace trapcorr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation
/// (non-positive energy, negative time, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Invalid configuration or malformed input (bad cutoff, mismatched grids).
class ArgumentError : public Error {
  public:
    using Error::Error;
};

/// The phase shift is identically zero for vanishing coupling and the
/// closed form is singular there.
class DegenerateCouplingError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Sampled data is too coarse for segment averaging.
class ResolutionError : public ArgumentError {
  public:
    ResolutionError(const std::string &what, std::size_t segment)
        : ArgumentError(what), segment_(segment) {}

    [[nodiscard]] std::size_t segment() const noexcept { return segment_; }

  private:
    std::size_t segment_;
};

/// An iterative numerical procedure failed to converge.
class ConvergenceError : public Error {
  public:
    using Error::Error;
};

/// Least-squares fit hit its iteration cap; carries the best parameters seen.
class FitConvergenceError : public ConvergenceError {
  public:
    FitConvergenceError(const std::string &what, std::vector<double> best)
        : ConvergenceError(what), best_(std::move(best)) {}

    [[nodiscard]] const std::vector<double> &best_params() const noexcept {
        return best_;
    }

  private:
    std::vector<double> best_;
};

} // namespace trapcorr

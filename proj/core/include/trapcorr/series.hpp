#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <vector>

namespace trapcorr {

using Complex = std::complex<double>;

/// Where a series of correlation values came from.
enum class Provenance {
    Exact,          ///< spectral sum from exact diagonalization
    CircuitExact,   ///< statevector Hadamard test, exact expectations
    CircuitSampled, ///< statevector Hadamard test, finite shots
    Analytic,       ///< closed-form infinite-volume limit or model
    Derived,        ///< result of arithmetic on other series
};

[[nodiscard]] std::string_view to_string(Provenance p) noexcept;

/// Complex values on a strictly increasing time grid.
class ComplexSeries {
  public:
    ComplexSeries() = default;
    /// Throws ArgumentError on length mismatch, non-increasing times, or
    /// non-finite entries.
    ComplexSeries(std::vector<double> times, std::vector<Complex> values,
                  Provenance provenance);

    [[nodiscard]] std::span<const double> times() const & noexcept {
        return times_;
    }
    [[nodiscard]] std::span<const Complex> values() const & noexcept {
        return values_;
    }
    // Views into a temporary would dangle.
    std::span<const double> times() const && = delete;
    std::span<const Complex> values() const && = delete;
    [[nodiscard]] Provenance provenance() const noexcept { return provenance_; }
    [[nodiscard]] std::size_t size() const noexcept { return times_.size(); }
    [[nodiscard]] bool empty() const noexcept { return times_.empty(); }

  private:
    std::vector<double> times_;
    std::vector<Complex> values_;
    Provenance provenance_ = Provenance::Derived;
};

/// Uniform grid of `intervals + 1` points from `start` to `stop` inclusive.
[[nodiscard]] std::vector<double> uniform_grid(double start, double stop,
                                               std::size_t intervals);

} // namespace trapcorr

#include "trapcorr/series.hpp"

#include <cmath>
#include <string>

#include "trapcorr/error.hpp"

namespace trapcorr {

std::string_view to_string(Provenance p) noexcept {
    switch (p) {
    case Provenance::Exact:
        return "exact";
    case Provenance::CircuitExact:
        return "circuit-exact";
    case Provenance::CircuitSampled:
        return "circuit-sampled";
    case Provenance::Analytic:
        return "analytic";
    case Provenance::Derived:
        return "derived";
    }
    return "unknown";
}

ComplexSeries::ComplexSeries(std::vector<double> times,
                             std::vector<Complex> values, Provenance provenance)
    : times_(std::move(times)), values_(std::move(values)),
      provenance_(provenance) {
    if (times_.size() != values_.size())
        throw ArgumentError("series: " + std::to_string(times_.size()) +
                            " times but " + std::to_string(values_.size()) +
                            " values");
    for (std::size_t i = 0; i < times_.size(); ++i) {
        if (!std::isfinite(times_[i]) || !std::isfinite(values_[i].real()) ||
            !std::isfinite(values_[i].imag()))
            throw ArgumentError("series: non-finite entry at row " +
                                std::to_string(i));
        if (i > 0 && !(times_[i] > times_[i - 1]))
            throw ArgumentError("series: times not strictly increasing at row " +
                                std::to_string(i));
    }
}

std::vector<double> uniform_grid(double start, double stop,
                                 std::size_t intervals) {
    if (intervals == 0 || !(stop > start))
        throw ArgumentError("uniform_grid: need stop > start and at least one "
                            "interval");
    std::vector<double> grid(intervals + 1);
    const double step = (stop - start) / static_cast<double>(intervals);
    for (std::size_t i = 0; i <= intervals; ++i)
        grid[i] = start + step * static_cast<double>(i);
    grid.back() = stop;
    return grid;
}

} // namespace trapcorr

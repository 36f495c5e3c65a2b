#include "trapcorr/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "trapcorr/error.hpp"
#include "trapcorr/parallel.hpp"

namespace trapcorr {

ComplexSeries difference(const ComplexSeries &c, const ComplexSeries &c0) {
    if (c.size() != c0.size() ||
        !std::equal(c.times().begin(), c.times().end(), c0.times().begin()))
        throw ArgumentError("difference: series have different time grids");
    std::vector<Complex> values(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        values[i] = c.values()[i] - c0.values()[i];
    return {std::vector<double>(c.times().begin(), c.times().end()),
            std::move(values), c.provenance()};
}

double oscillation_period(const MomentumBasis &basis) {
    const auto n = basis.max_abs_index();
    if (n == 0)
        return std::numeric_limits<double>::infinity();
    return basis.box_length() / (2.0 * std::numbers::pi * static_cast<double>(n));
}

ResolutionGuard default_guard(const MomentumBasis &basis) {
    const double period = oscillation_period(basis);
    return {20, std::isfinite(period) ? period / 8.0 : 0.0};
}

namespace {

Complex interpolate(std::span<const double> t, std::span<const Complex> v,
                    double x) {
    const auto it = std::lower_bound(t.begin(), t.end(), x);
    const auto i = static_cast<std::size_t>(it - t.begin());
    if (i < t.size() && t[i] == x)
        return v[i];
    const double w = (x - t[i - 1]) / (t[i] - t[i - 1]);
    return (1.0 - w) * v[i - 1] + w * v[i];
}

} // namespace

SegmentAverage segment_average(const ComplexSeries &dc, double t0,
                               std::size_t n_segments,
                               const ResolutionGuard &guard) {
    if (n_segments == 0)
        throw ArgumentError("segment_average: need at least one segment");
    if (!(t0 > 0.0))
        throw ArgumentError("segment_average: t0 must be positive");
    const auto times = dc.times();
    const auto values = dc.values();
    const double width = t0 / static_cast<double>(n_segments);
    const double snap = 1e-9 * width;
    if (dc.size() < 2 || times.front() > snap || times.back() < t0 - snap)
        throw ArgumentError("segment_average: series must cover [0, t0]");

    SegmentAverage out;
    out.t0 = t0;
    out.n_segments = n_segments;
    out.centers.resize(n_segments);
    out.averages.resize(n_segments);

    std::vector<double> ts;
    std::vector<Complex> vs;
    for (std::size_t seg = 0; seg < n_segments; ++seg) {
        const double lo = width * static_cast<double>(seg);
        const double hi = seg + 1 == n_segments ? t0 : lo + width;
        out.centers[seg] = (static_cast<double>(seg) + 0.5) * width;

        // Samples inside [lo, hi], with exact edge values prepended/appended.
        ts.clear();
        vs.clear();
        const auto first = std::lower_bound(times.begin(), times.end(), lo - snap);
        const auto last = std::upper_bound(times.begin(), times.end(), hi + snap);
        const auto inside = static_cast<std::size_t>(last - first);
        if (inside < guard.min_points_per_segment) {
            std::ostringstream msg;
            msg << "segment_average: segment " << seg + 1 << " [" << lo << ", "
                << hi << "] has " << inside << " samples, need "
                << guard.min_points_per_segment;
            throw ResolutionError(msg.str(), seg);
        }
        if (guard.max_spacing > 0.0) {
            const auto begin = static_cast<std::size_t>(
                first == times.begin() ? 0 : first - times.begin() - 1);
            const auto end = std::min(static_cast<std::size_t>(last - times.begin()),
                                      times.size() - 1);
            for (std::size_t i = begin; i < end; ++i) {
                if (times[i + 1] - times[i] >= guard.max_spacing) {
                    std::ostringstream msg;
                    msg << "segment_average: segment " << seg + 1
                        << " has sample spacing " << times[i + 1] - times[i]
                        << " >= " << guard.max_spacing
                        << " (1/8 of the oscillation period)";
                    throw ResolutionError(msg.str(), seg);
                }
            }
        }

        const Complex v_lo = interpolate(times, values, lo);
        const Complex v_hi = interpolate(times, values, hi);
        ts.push_back(lo);
        vs.push_back(v_lo);
        for (auto it = first; it != last; ++it) {
            if (*it - lo <= snap || hi - *it <= snap)
                continue;
            ts.push_back(*it);
            vs.push_back(values[static_cast<std::size_t>(it - times.begin())]);
        }
        ts.push_back(hi);
        vs.push_back(v_hi);

        Complex integral = 0.0;
        for (std::size_t i = 1; i < ts.size(); ++i)
            integral += 0.5 * (ts[i] - ts[i - 1]) * (vs[i] + vs[i - 1]);
        out.averages[seg] = integral / (hi - lo);
    }

    for (const double t : times)
        if (t >= -snap && t <= t0 + snap)
            out.sample_times.push_back(t);
    return out;
}

ContactModel::ContactModel(double reduced_mass) : reduced_mass_(reduced_mass) {
    if (!(reduced_mass > 0.0))
        throw ArgumentError("contact model: reduced mass must be positive");
}

bool ContactModel::admissible(std::span<const double> params) const {
    return params.size() == 1 && std::isfinite(params[0]);
}

Complex ContactModel::evaluate(std::span<const double> params, double t) const {
    return delta_c_infinite(t, params[0], reduced_mass_);
}

PhaseShiftIntegralModel::PhaseShiftIntegralModel(PhaseShiftFn delta,
                                                 std::size_t num_params,
                                                 WeightedIntegralOptions options)
    : delta_(std::move(delta)), n_(num_params), options_(options) {
    if (!delta_)
        throw ArgumentError("integral model: empty phase-shift function");
}

bool PhaseShiftIntegralModel::admissible(std::span<const double> params) const {
    return params.size() == n_ &&
           std::all_of(params.begin(), params.end(),
                       [](double p) { return std::isfinite(p); });
}

Complex PhaseShiftIntegralModel::evaluate(std::span<const double> params,
                                          double t) const {
    const std::vector<double> p(params.begin(), params.end());
    return weighted_integral([&](double eps) { return delta_(eps, p); }, t,
                             options_);
}

Complex model_delta_c(const PhaseShiftModel &model,
                      std::span<const double> params, double t) {
    if (!model.admissible(params))
        throw ArgumentError("model_delta_c: inadmissible parameters for " +
                            model.name() + " model");
    return model.evaluate(params, t);
}

std::vector<Complex> model_segment_average(const PhaseShiftModel &model,
                                           std::span<const double> params,
                                           const SegmentAverage &data) {
    if (!model.admissible(params))
        throw ArgumentError("model_segment_average: inadmissible parameters");
    const auto &ts = data.sample_times;
    std::vector<Complex> values(ts.size());
    parallel_for(ts.size(), [&](std::size_t i) {
        values[i] = model.evaluate(params, std::max(ts[i], 0.0));
    });
    const ComplexSeries series(ts, std::move(values), Provenance::Analytic);
    ResolutionGuard none{0, 0.0};
    return segment_average(series, data.t0, data.n_segments, none).averages;
}

} // namespace trapcorr

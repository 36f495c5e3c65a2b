#include "cli/commands.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "trapcorr/circuit.hpp"
#include "trapcorr/error.hpp"
#include "trapcorr/hamiltonian.hpp"
#include "trapcorr/model.hpp"

namespace trapcorr::cli {

namespace {

// Offset for the free-theory run so its shots are independent of the
// interacting run.
constexpr std::uint64_t kFreeSeedOffset = 0x9e3779b97f4a7c15ULL;

std::vector<double> sample_grid(const RunConfig &c) {
    return uniform_grid(0.0, c.t0, c.n_segments * c.samples_per_segment);
}

ResolutionGuard guard_for(const RunConfig &c) { return default_guard(c.basis()); }

void check_resolution(const RunConfig &c, const std::vector<double> &grid) {
    const auto guard = guard_for(c);
    const double spacing = grid.size() > 1 ? grid[1] - grid[0] : c.t0;
    if (guard.max_spacing > 0.0 && spacing >= guard.max_spacing)
        throw ResolutionError(
            "correlate: sample spacing " + format_double(spacing) +
                " is not below " + format_double(guard.max_spacing) +
                "; raise samples_per_segment",
            0);
}

} // namespace

CsvTable spectrum(const RunConfig &config) {
    const auto params = config.physical();
    const auto basis = config.basis();
    const auto decomp =
        eigendecompose(build_hamiltonian(params, basis), Eigenvectors::Skip);
    CsvTable t{{"index", "energy"}, {}};
    for (Eigen::Index i = 0; i < decomp.eigenvalues.size(); ++i)
        t.rows.push_back({static_cast<double>(i), decomp.eigenvalues[i]});
    return t;
}

CsvTable correlate(const RunConfig &config) {
    const auto params = config.physical();
    const auto basis = config.basis();
    const auto grid = sample_grid(config);
    check_resolution(config, grid);

    std::optional<ComplexSeries> c, c0;
    if (config.backend == Backend::Exact) {
        const auto decomp =
            eigendecompose(build_hamiltonian(params, basis), Eigenvectors::Skip);
        c = correlation_exact(decomp, grid);
        c0 = correlation_free(basis, params, grid);
    } else {
        const auto schedule = config.schedule();
        c = correlation_circuit(grid, schedule, config.estimator(), params, basis);
        auto free_mode = config.estimator();
        if (auto *s = std::get_if<SampledEstimator>(&free_mode))
            s->seed += kFreeSeedOffset;
        c0 = correlation_circuit(grid, schedule, free_mode, params.with_v0(0.0),
                                 basis);
    }
    const auto dc = difference(*c, *c0);

    CsvTable t{{"t", "re_c", "im_c", "re_c0", "im_c0", "re_dc", "im_dc"}, {}};
    t.rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto a = c->values()[i];
        const auto b = c0->values()[i];
        const auto d = dc.values()[i];
        t.rows.push_back({grid[i], a.real(), a.imag(), b.real(), b.imag(),
                          d.real(), d.imag()});
    }
    return t;
}

CsvTable average(const RunConfig &config, const CsvTable &dc) {
    const auto times = dc.column_values("t");
    const auto re = dc.column_values("re_dc");
    const auto im = dc.column_values("im_dc");
    std::vector<Complex> values(times.size());
    for (std::size_t i = 0; i < times.size(); ++i)
        values[i] = {re[i], im[i]};
    const ComplexSeries series(times, values, Provenance::Derived);
    const auto avg =
        segment_average(series, config.t0, config.n_segments, guard_for(config));

    const auto mu = config.physical().reduced_mass();
    CsvTable t{{"t_center", "re_avg", "im_avg", "re_dc_inf", "im_dc_inf"}, {}};
    for (std::size_t i = 0; i < avg.n_segments; ++i) {
        const auto inf = delta_c_infinite(avg.centers[i], config.v0, mu);
        t.rows.push_back({avg.centers[i], avg.averages[i].real(),
                          avg.averages[i].imag(), inf.real(), inf.imag()});
    }
    return t;
}

SegmentAverage averaged_data(const RunConfig &config, const CsvTable &averaged) {
    SegmentAverage data;
    data.centers = averaged.column_values("t_center");
    const auto re = averaged.column_values("re_avg");
    const auto im = averaged.column_values("im_avg");
    if (data.centers.empty())
        throw ArgumentError("fit: no segments in input");
    data.n_segments = data.centers.size();
    const double width = 2.0 * data.centers.front();
    if (!(width > 0.0))
        throw ArgumentError("fit: first segment center must be positive");
    data.t0 = width * static_cast<double>(data.n_segments);
    for (std::size_t i = 0; i < data.n_segments; ++i) {
        const double expected = (static_cast<double>(i) + 0.5) * width;
        if (std::abs(data.centers[i] - expected) > 1e-9 * data.t0)
            throw ArgumentError("fit: segment centers are not evenly spaced");
        data.averages.emplace_back(re[i], im[i]);
    }
    data.sample_times =
        uniform_grid(0.0, data.t0, data.n_segments * config.samples_per_segment);
    return data;
}

FitReport fit(const RunConfig &config, const CsvTable &averaged) {
    const auto data = averaged_data(config, averaged);
    const ContactModel model(config.physical().reduced_mass());
    const double guess[] = {config.initial_v0};
    FitReport report{fit_potential(data, model, guess), model.name(),
                     data.n_segments, data.t0};
    return report;
}

std::string to_json(const FitReport &report) {
    nlohmann::ordered_json j;
    j["model"] = report.model;
    j["v0"] = report.result.params.at(0);
    j["converged"] = report.result.converged;
    j["iterations"] = report.result.iterations;
    j["residual_norm"] = report.result.residual_norm;
    j["gradient_norm"] = report.result.gradient_norm;
    j["n_segments"] = report.n_segments;
    j["t0"] = report.t0;
    return j.dump(2) + "\n";
}

CsvTable oracle(const RunConfig &config) {
    const auto params = config.physical();
    const auto grid = uniform_grid(0.0, config.t0, config.n_segments);
    std::function<double(double)> delta = [](double) { return 0.0; };
    if (config.v0 != 0.0)
        delta = [&params](double eps) { return phase_shift(eps, params); };

    CsvTable t{{"t", "re_integral", "im_integral", "re_closed", "im_closed",
                "abs_diff"},
               {}};
    for (double time : grid) {
        const auto w = weighted_integral(delta, time);
        const auto closed = delta_c_infinite(time, params);
        t.rows.push_back({time, w.real(), w.imag(), closed.real(), closed.imag(),
                          std::abs(w - closed)});
    }
    return t;
}

void run_pipeline(const RunConfig &config, const std::filesystem::path &out_dir) {
    std::filesystem::create_directories(out_dir);
    const auto dc = correlate(config);
    {
        std::ofstream out(out_dir / "correlate.csv");
        write_csv(out, dc);
    }
    const auto avg = average(config, dc);
    {
        std::ofstream out(out_dir / "average.csv");
        write_csv(out, avg);
    }
    if (config.fit) {
        const auto report = fit(config, avg);
        std::ofstream out(out_dir / "fit.json");
        out << to_json(report);
    }
}

} // namespace trapcorr::cli

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "cli/config.hpp"
#include "cli/csv.hpp"
#include "trapcorr/analysis.hpp"

namespace trapcorr::cli {

/// index,energy of H in ascending order.
[[nodiscard]] CsvTable spectrum(const RunConfig &config);

/// t, C, C0 and C - C0 on the grid linspace(0, t0, n_segments *
/// samples_per_segment + 1). Throws ResolutionError if the grid is too coarse
/// for the basis.
[[nodiscard]] CsvTable correlate(const RunConfig &config);

/// Segment averages of the re_dc/im_dc columns of a correlate table, with the
/// closed-form prediction at each center.
[[nodiscard]] CsvTable average(const RunConfig &config, const CsvTable &dc);

/// Rebuilds the averaged data set from an average table. The sample grid is
/// taken from samples_per_segment so the model sees the same quadrature as
/// the data did.
[[nodiscard]] SegmentAverage averaged_data(const RunConfig &config,
                                           const CsvTable &averaged);

struct FitReport {
    FitResult result;
    std::string model;
    std::size_t n_segments = 0;
    double t0 = 0.0;
};

/// Contact-model fit of an average table. Throws FitConvergenceError on
/// non-convergence.
[[nodiscard]] FitReport fit(const RunConfig &config, const CsvTable &averaged);
[[nodiscard]] std::string to_json(const FitReport &report);

/// Weighted phase-shift integral against the closed form on
/// linspace(0, t0, n_segments + 1).
[[nodiscard]] CsvTable oracle(const RunConfig &config);

/// Whole pipeline into `out_dir`: correlate.csv, average.csv and, if the
/// config enables it, fit.json.
void run_pipeline(const RunConfig &config, const std::filesystem::path &out_dir);

/// Maps exceptions to process exit codes: 0 ok, 1 invalid input,
/// 2 numerical non-convergence.
template <class F> int guarded(F &&body, std::ostream &err);

} // namespace trapcorr::cli

#include "cli/commands_impl.hpp"

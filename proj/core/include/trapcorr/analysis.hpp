#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "trapcorr/hamiltonian.hpp"
#include "trapcorr/model.hpp"
#include "trapcorr/series.hpp"

namespace trapcorr {

/// Element-wise c - c0. Throws ArgumentError unless both share a time grid.
[[nodiscard]] ComplexSeries difference(const ComplexSeries &c,
                                       const ComplexSeries &c0);

/// Averages of a series over N_t equal windows of [0, t0].
struct SegmentAverage {
    double t0 = 0.0;
    std::size_t n_segments = 0;
    std::vector<double> centers;   ///< (i - 1/2) * t0 / N_t
    std::vector<Complex> averages; ///< windowed mean of the input
    /// Input sample times that fall in [0, t0]; model averages reuse them so
    /// data and model see the same quadrature.
    std::vector<double> sample_times;

    [[nodiscard]] double segment_width() const noexcept {
        return t0 / static_cast<double>(n_segments);
    }
};

/// Sampling requirements checked before averaging.
struct ResolutionGuard {
    std::size_t min_points_per_segment = 20;
    /// Largest admissible spacing between samples; <= 0 disables the check.
    double max_spacing = 0.0;
};

/// Estimated period L / (2 pi N) of the cutoff-driven oscillation of
/// C(t) - C0(t), with N the largest |n| in the basis.
[[nodiscard]] double oscillation_period(const MomentumBasis &basis);

/// Guard requiring >= 20 points per segment and spacing below period / 8.
[[nodiscard]] ResolutionGuard default_guard(const MomentumBasis &basis);

/// Trapezoidal mean of `dc` over each window [(i-1) dt, i dt], dt = t0 / N_t.
/// Window edges that fall between samples are linearly interpolated.
///
/// Throws ArgumentError if the series does not cover [0, t0] or n_segments
/// is 0, and ResolutionError naming the first under-resolved window.
[[nodiscard]] SegmentAverage segment_average(const ComplexSeries &dc, double t0,
                                             std::size_t n_segments,
                                             const ResolutionGuard &guard = {});

/// Parametrized infinite-volume prediction for C(t) - C0(t).
class PhaseShiftModel {
  public:
    virtual ~PhaseShiftModel() = default;

    [[nodiscard]] virtual std::size_t num_params() const = 0;
    [[nodiscard]] virtual bool
    admissible(std::span<const double> params) const = 0;
    /// Unchecked evaluation; use model_delta_c() for the validated path.
    [[nodiscard]] virtual Complex
    evaluate(std::span<const double> params, double t) const = 0;
    [[nodiscard]] virtual std::string name() const = 0;
};

/// Contact interaction, one parameter v0; evaluates the closed form.
class ContactModel final : public PhaseShiftModel {
  public:
    explicit ContactModel(double reduced_mass);

    [[nodiscard]] std::size_t num_params() const override { return 1; }
    [[nodiscard]] bool admissible(std::span<const double> params) const override;
    [[nodiscard]] Complex evaluate(std::span<const double> params,
                                   double t) const override;
    [[nodiscard]] std::string name() const override { return "contact"; }
    [[nodiscard]] double reduced_mass() const noexcept { return reduced_mass_; }

  private:
    double reduced_mass_;
};

/// User-supplied delta(eps; params), mapped to C(t) - C0(t) through
/// weighted_integral().
class PhaseShiftIntegralModel final : public PhaseShiftModel {
  public:
    using PhaseShiftFn =
        std::function<double(double eps, std::span<const double> params)>;

    PhaseShiftIntegralModel(PhaseShiftFn delta, std::size_t num_params,
                            WeightedIntegralOptions options = {});

    [[nodiscard]] std::size_t num_params() const override { return n_; }
    [[nodiscard]] bool admissible(std::span<const double> params) const override;
    [[nodiscard]] Complex evaluate(std::span<const double> params,
                                   double t) const override;
    [[nodiscard]] std::string name() const override { return "integral"; }

  private:
    PhaseShiftFn delta_;
    std::size_t n_;
    WeightedIntegralOptions options_;
};

/// Validated model evaluation. Throws ArgumentError for inadmissible params.
[[nodiscard]] Complex model_delta_c(const PhaseShiftModel &model,
                                    std::span<const double> params, double t);

/// Model values pushed through the same segment averaging as `data`.
[[nodiscard]] std::vector<Complex>
model_segment_average(const PhaseShiftModel &model,
                      std::span<const double> params,
                      const SegmentAverage &data);

struct FitOptions {
    int max_iterations = 200;
    double step_tolerance = 1e-8;     ///< relative parameter step
    double residual_tolerance = 1e-8; ///< relative change of the cost
    double gradient_tolerance = 1e-6; ///< relative to |J| |r|
};

struct FitResult {
    std::vector<double> params;
    /// sqrt(mean_i |avg_i - model_i|^2)
    double residual_norm = 0.0;
    int iterations = 0;
    bool converged = false;
    /// max |J^T r| at the returned parameters.
    double gradient_norm = 0.0;
    /// residual_norm of the initial guess and of every accepted step.
    std::vector<double> residual_history;
};

/// Levenberg-Marquardt fit of segment-averaged model values to `data`,
/// real and imaginary parts weighted equally, central-difference Jacobian.
///
/// Throws ArgumentError if there are fewer than 2 * num_params segments or
/// the guess is inadmissible, and FitConvergenceError (carrying the best
/// parameters) when max_iterations is exhausted.
[[nodiscard]] FitResult fit_potential(const SegmentAverage &data,
                                      const PhaseShiftModel &model,
                                      std::span<const double> initial_guess,
                                      const FitOptions &options = {});

} // namespace trapcorr

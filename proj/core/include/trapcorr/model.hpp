#pragma once

#include <cstdint>
#include <functional>

#include "trapcorr/series.hpp"

namespace trapcorr {

/// Physical inputs of the trapped two-fermion problem in natural units.
///
/// `v0` is the contact coupling, `mass` the single-fermion mass, `box_length`
/// the periodic box size L and `n_cut` the momentum cutoff index N.
class PhysicalParams {
  public:
    /// Throws ArgumentError unless mass > 0, box_length > 0, n_cut >= 0 and
    /// every value is finite.
    PhysicalParams(double v0, double mass, double box_length,
                   std::int64_t n_cut);

    [[nodiscard]] double v0() const noexcept { return v0_; }
    [[nodiscard]] double mass() const noexcept { return mass_; }
    [[nodiscard]] double reduced_mass() const noexcept { return mass_ / 2.0; }
    [[nodiscard]] double box_length() const noexcept { return box_length_; }
    [[nodiscard]] std::int64_t n_cut() const noexcept { return n_cut_; }

    [[nodiscard]] PhysicalParams with_v0(double v0) const;
    [[nodiscard]] PhysicalParams with_box_length(double box_length) const;
    [[nodiscard]] PhysicalParams with_n_cut(std::int64_t n_cut) const;

  private:
    double v0_;
    double mass_;
    double box_length_;
    std::int64_t n_cut_;
};

/// Infinite-volume s-wave phase shift of the contact interaction,
/// cot(delta) = -sqrt(2 mu eps) / (mu v0).
///
/// The branch is the continuous one with delta -> 0 as eps -> infinity, so
/// for v0 > 0 the result lies in (-pi/2, 0).
///
/// Throws DomainError for eps <= 0 and DegenerateCouplingError for v0 == 0.
[[nodiscard]] double phase_shift(double eps, const PhysicalParams &params);

/// Same as phase_shift() but in terms of the coupling and reduced mass only.
[[nodiscard]] double contact_phase_shift(double eps, double v0,
                                         double reduced_mass);

/// Infinite-volume limit of C(t) - C0(t) for the contact interaction:
///   1/2 erfc(mu v0 sqrt(i t / 2mu)) exp((mu v0)^2 i t / 2mu) - 1/2
/// with the principal square root. Throws DomainError for t < 0.
[[nodiscard]] Complex delta_c_infinite(double t, const PhysicalParams &params);
[[nodiscard]] Complex delta_c_infinite(double t, double v0,
                                       double reduced_mass);

struct WeightedIntegralOptions {
    /// First damping rate as a fraction of t.
    double initial_damping_ratio = 0.5;
    /// Successive extrapolants must agree to this absolute tolerance.
    double tolerance = 1e-8;
    /// Maximum number of halvings of the damping rate.
    int max_levels = 16;
};

/// (i t / pi) * integral_0^inf delta(eps) exp(-i eps t) d eps.
///
/// The oscillatory integral is regularized with exp(-eta eps); the damped
/// integral is analytic in eta, so values at eta = t/2, t/4, ... are
/// extrapolated to eta = 0 with Neville's scheme. `delta` must be bounded
/// and continuous on (0, inf) with a finite limit at infinity; a square-root
/// branch point at eps = 0 is handled by a change of variables.
///
/// Returns 0 at t == 0. Throws DomainError for t < 0 and ConvergenceError if
/// the extrapolation does not settle within `max_levels`.
[[nodiscard]] Complex
weighted_integral(const std::function<double(double)> &delta, double t,
                  const WeightedIntegralOptions &options = {});

} // namespace trapcorr

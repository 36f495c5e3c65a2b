#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "trapcorr/circuit.hpp"
#include "trapcorr/hamiltonian.hpp"
#include "trapcorr/model.hpp"

namespace trapcorr::cli {

enum class Backend { Exact, CircuitExact, CircuitSampled };

[[nodiscard]] std::string to_string(Backend b);

/// Flat run configuration; see tools/configs/*.yaml for annotated examples.
struct RunConfig {
    // physics
    double v0 = 0.0;
    double mass = 2.0;
    double box_length = 1.0;
    std::int64_t n_cut = 0;

    Backend backend = Backend::Exact;
    int gamma = 0;
    std::int64_t trotter_steps_per_unit_time = 1024;
    std::int64_t shots = 0;
    std::uint64_t seed = 0;

    // time sampling and averaging
    double t0 = 2.0;
    std::size_t n_segments = 20;
    std::size_t samples_per_segment = 100;

    bool fit = false;
    double initial_v0 = 1.0;

    [[nodiscard]] PhysicalParams physical() const;
    /// Symmetric cutoff for the exact backend, gamma-qubit grid otherwise.
    [[nodiscard]] MomentumBasis basis() const;
    [[nodiscard]] EstimatorMode estimator() const;
    [[nodiscard]] TrotterSchedule schedule() const;
    /// Throws ArgumentError on any missing or inconsistent field.
    void validate() const;
};

/// Parses a flat YAML mapping. Unknown keys are rejected.
[[nodiscard]] RunConfig parse_config(const std::string &text);
[[nodiscard]] RunConfig load_config(const std::filesystem::path &path);

} // namespace trapcorr::cli

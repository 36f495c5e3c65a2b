#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "trapcorr/hamiltonian.hpp"
#include "trapcorr/model.hpp"
#include "trapcorr/series.hpp"

namespace trapcorr {

/// Amplitudes of one ancilla qubit and a system register of `system_qubits`
/// qubits. The ancilla is the most significant bit: amplitude index
/// ancilla * 2^system_qubits + system_state.
class Statevector {
  public:
    /// |0> on the ancilla, |system_state> on the register.
    Statevector(int system_qubits, std::uint64_t system_state = 0);

    [[nodiscard]] int system_qubits() const noexcept { return system_qubits_; }
    [[nodiscard]] int num_qubits() const noexcept { return system_qubits_ + 1; }
    [[nodiscard]] std::size_t system_dim() const noexcept {
        return std::size_t{1} << system_qubits_;
    }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amplitudes_; }
    /// Half of the amplitudes with the ancilla in |bit>.
    [[nodiscard]] std::span<Complex> ancilla_block(int bit) noexcept;
    [[nodiscard]] std::span<const Complex> ancilla_block(int bit) const noexcept;

    [[nodiscard]] double norm_squared() const noexcept;

    void apply_ancilla_hadamard() noexcept;
    /// diag(1, phase) on the ancilla.
    void apply_ancilla_phase(Complex phase) noexcept;
    [[nodiscard]] double ancilla_zero_probability() const noexcept;

  private:
    int system_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Ancilla |0>, register holding basis position `position` (offset binary,
/// position 0 is the most negative momentum). The basis must be a qubit
/// register basis. Throws ArgumentError otherwise or if out of range.
[[nodiscard]] Statevector prepare_k_state(const MomentumBasis &basis,
                                          std::size_t position);

/// exp(-i H0 dt): phase exp(-i k^2 dt / m) on every |k>. With `controlled`
/// only the ancilla-|1> block is touched.
void kinetic_step(Statevector &state, double dt, const PhysicalParams &params,
                  const MomentumBasis &basis, bool controlled);

/// exp(-i HV dt) = I + ((exp(-i theta) - 1) / D) J with theta = D v0 dt / L,
/// applied in O(D) through the amplitude sum.
void potential_step(Statevector &state, double dt, const PhysicalParams &params,
                    const MomentumBasis &basis, bool controlled);

/// Rotation angle D v0 dt / L of the constant-coupling evolution.
[[nodiscard]] double potential_angle(double dt, const PhysicalParams &params,
                                     const MomentumBasis &basis);

/// Closed-form exp(-i HV dt) on a gamma-qubit register as a dense matrix:
/// diagonal (e^{-i theta} + D - 1)/D, off-diagonal (e^{-i theta} - 1)/D.
[[nodiscard]] Eigen::MatrixXcd potential_matrix(int gamma, double theta);

/// The same operator assembled term by term as the sum over all 2^gamma
/// tensor products of I and X. Verification only; refuses gamma > 6.
[[nodiscard]] Eigen::MatrixXcd xgate_decomposition_matrix(int gamma,
                                                          double theta);

/// First-order product formula with `num_steps` equal steps.
struct TrotterConfig {
    int num_steps = 1;
    double total_time = 0.0;

    [[nodiscard]] double time_step() const noexcept {
        return total_time / num_steps;
    }
    /// Throws ArgumentError for num_steps < 1 or negative/non-finite time.
    void validate() const;
};

/// Step count grows with the evolution time: ceil(steps_per_unit_time * t),
/// never below min_steps.
struct TrotterSchedule {
    double steps_per_unit_time = 1024.0;
    int min_steps = 1;

    [[nodiscard]] TrotterConfig at(double t) const;
};

/// Applies num_steps repetitions of exp(-i H0 dt) exp(-i HV dt).
void trotter_evolve(Statevector &state, const TrotterConfig &config,
                    const PhysicalParams &params, const MomentumBasis &basis,
                    bool controlled);

struct ExactEstimator {};

/// Each ancilla expectation is the mean of `shots` Bernoulli outcomes drawn
/// from the exact distribution with a generator seeded by `seed`.
struct SampledEstimator {
    std::int64_t shots = 1;
    std::uint64_t seed = 0;
};

using EstimatorMode = std::variant<ExactEstimator, SampledEstimator>;

/// Hadamard-test estimate of <k| U(t) |k> with U the Trotterized evolution.
///
/// The ancilla is put in (|0> + |1>)/sqrt(2), U is applied controlled on
/// it, and the ancilla is read out in the X basis (real part) and, after an
/// extra S^dagger, again in the X basis (imaginary part).
[[nodiscard]] Complex hadamard_test(std::size_t position,
                                    const TrotterConfig &config,
                                    const EstimatorMode &mode,
                                    const PhysicalParams &params,
                                    const MomentumBasis &basis);

/// C(t) = sum over all register positions of the Hadamard-test estimate.
/// Sampled mode derives an independent seed for every (time, position)
/// pair, so output does not depend on thread count.
[[nodiscard]] ComplexSeries correlation_circuit(std::span<const double> times,
                                                const TrotterSchedule &schedule,
                                                const EstimatorMode &mode,
                                                const PhysicalParams &params,
                                                const MomentumBasis &basis);

} // namespace trapcorr

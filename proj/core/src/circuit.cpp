#include "trapcorr/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "trapcorr/error.hpp"
#include "trapcorr/parallel.hpp"

namespace trapcorr {

Statevector::Statevector(int system_qubits, std::uint64_t system_state)
    : system_qubits_(system_qubits) {
    if (system_qubits < 1 || system_qubits > 30)
        throw ArgumentError("statevector: register size must be in [1, 30]");
    amplitudes_.assign(std::size_t{2} << system_qubits, Complex{0.0, 0.0});
    if (system_state >= system_dim())
        throw ArgumentError("statevector: basis state " +
                            std::to_string(system_state) + " out of range");
    amplitudes_[system_state] = 1.0;
}

std::span<Complex> Statevector::ancilla_block(int bit) noexcept {
    return std::span<Complex>(amplitudes_).subspan(bit ? system_dim() : 0,
                                                   system_dim());
}

std::span<const Complex> Statevector::ancilla_block(int bit) const noexcept {
    return std::span<const Complex>(amplitudes_)
        .subspan(bit ? system_dim() : 0, system_dim());
}

double Statevector::norm_squared() const noexcept {
    double s = 0.0;
    for (const auto &a : amplitudes_)
        s += std::norm(a);
    return s;
}

void Statevector::apply_ancilla_hadamard() noexcept {
    auto lo = ancilla_block(0);
    auto hi = ancilla_block(1);
    for (std::size_t j = 0; j < lo.size(); ++j) {
        const Complex a = lo[j];
        const Complex b = hi[j];
        lo[j] = M_SQRT1_2 * (a + b);
        hi[j] = M_SQRT1_2 * (a - b);
    }
}

void Statevector::apply_ancilla_phase(Complex phase) noexcept {
    for (auto &a : ancilla_block(1))
        a *= phase;
}

double Statevector::ancilla_zero_probability() const noexcept {
    double p = 0.0;
    for (const auto &a : ancilla_block(0))
        p += std::norm(a);
    return p;
}

namespace {

int require_register(const MomentumBasis &basis) {
    const auto q = basis.num_qubits();
    if (!q)
        throw ArgumentError("circuit: basis is not a qubit register basis");
    return *q;
}

void check_state(const Statevector &state, const MomentumBasis &basis) {
    if (state.system_qubits() != require_register(basis))
        throw ArgumentError("circuit: statevector and basis sizes differ");
}

// Precomputed per-step factors so long evolutions do not recompute phases.
struct StepFactors {
    std::vector<Complex> kinetic;
    Complex potential;
};

StepFactors step_factors(double dt, const PhysicalParams &params,
                         const MomentumBasis &basis) {
    StepFactors f;
    f.kinetic.reserve(basis.dim());
    for (const double k : basis.momenta())
        f.kinetic.push_back(std::polar(1.0, -free_pair_energy(k, params) * dt));
    const double theta = potential_angle(dt, params, basis);
    f.potential = (std::polar(1.0, -theta) - 1.0) /
                  static_cast<double>(basis.dim());
    return f;
}

void apply_kinetic(std::span<Complex> block, const std::vector<Complex> &phases) {
    for (std::size_t j = 0; j < block.size(); ++j)
        block[j] *= phases[j];
}

void apply_potential(std::span<Complex> block, Complex factor) {
    const Complex shift =
        factor * std::accumulate(block.begin(), block.end(), Complex{0.0, 0.0});
    for (auto &a : block)
        a += shift;
}

} // namespace

Statevector prepare_k_state(const MomentumBasis &basis, std::size_t position) {
    const int gamma = require_register(basis);
    if (position >= basis.dim())
        throw ArgumentError("prepare_k_state: position " +
                            std::to_string(position) + " outside basis of size " +
                            std::to_string(basis.dim()));
    return Statevector(gamma, position);
}

void kinetic_step(Statevector &state, double dt, const PhysicalParams &params,
                  const MomentumBasis &basis, bool controlled) {
    check_state(state, basis);
    const auto f = step_factors(dt, params, basis);
    if (!controlled)
        apply_kinetic(state.ancilla_block(0), f.kinetic);
    apply_kinetic(state.ancilla_block(1), f.kinetic);
}

double potential_angle(double dt, const PhysicalParams &params,
                       const MomentumBasis &basis) {
    return static_cast<double>(basis.dim()) * params.v0() * dt /
           params.box_length();
}

void potential_step(Statevector &state, double dt, const PhysicalParams &params,
                    const MomentumBasis &basis, bool controlled) {
    check_state(state, basis);
    const auto f = step_factors(dt, params, basis);
    if (!controlled)
        apply_potential(state.ancilla_block(0), f.potential);
    apply_potential(state.ancilla_block(1), f.potential);
}

Eigen::MatrixXcd potential_matrix(int gamma, double theta) {
    if (gamma < 1 || gamma > 12)
        throw ArgumentError("potential_matrix: gamma must be in [1, 12]");
    const Eigen::Index d = Eigen::Index{1} << gamma;
    const Complex phase = std::polar(1.0, -theta);
    const auto dd = static_cast<double>(d);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Constant(d, d, (phase - 1.0) / dd);
    u.diagonal().setConstant((phase + dd - 1.0) / dd);
    return u;
}

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

} // namespace

Eigen::MatrixXcd xgate_decomposition_matrix(int gamma, double theta) {
    if (gamma < 1 || gamma > 6)
        throw ArgumentError("xgate_decomposition_matrix: gamma must be in "
                            "[1, 6], got " +
                            std::to_string(gamma));
    const Eigen::Matrix2cd identity = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd x;
    x << 0.0, 1.0, 1.0, 0.0;

    const std::size_t d = std::size_t{1} << gamma;
    const Complex phase = std::polar(1.0, -theta);
    const auto dd = static_cast<double>(d);
    const Complex c_identity = (phase + dd - 1.0) / dd;
    const Complex c_flip = (phase - 1.0) / dd;

    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d),
                                                static_cast<Eigen::Index>(d));
    // Bit q of `mask` places X on qubit q; qubit gamma-1 is the leftmost
    // tensor factor.
    for (std::size_t mask = 0; mask < d; ++mask) {
        Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(1, 1);
        for (int q = gamma - 1; q >= 0; --q)
            term = kron(term, (mask >> q) & 1U ? x : identity);
        u += (mask == 0 ? c_identity : c_flip) * term;
    }
    return u;
}

void TrotterConfig::validate() const {
    if (num_steps < 1)
        throw ArgumentError("trotter: num_steps must be >= 1, got " +
                            std::to_string(num_steps));
    if (!(total_time >= 0.0) || !std::isfinite(total_time))
        throw ArgumentError("trotter: total_time must be finite and >= 0");
}

TrotterConfig TrotterSchedule::at(double t) const {
    if (!(steps_per_unit_time > 0.0) || min_steps < 1)
        throw ArgumentError("trotter schedule: need positive step density");
    const double raw = std::ceil(steps_per_unit_time * t - 1e-9);
    const int steps = std::max(min_steps, static_cast<int>(raw));
    return {steps, t};
}

void trotter_evolve(Statevector &state, const TrotterConfig &config,
                    const PhysicalParams &params, const MomentumBasis &basis,
                    bool controlled) {
    config.validate();
    check_state(state, basis);
    const auto f = step_factors(config.time_step(), params, basis);
    auto evolve = [&](std::span<Complex> block) {
        for (int s = 0; s < config.num_steps; ++s) {
            apply_potential(block, f.potential);
            apply_kinetic(block, f.kinetic);
        }
    };
    if (!controlled)
        evolve(state.ancilla_block(0));
    evolve(state.ancilla_block(1));
}

namespace {

// <Z> of the ancilla at readout, P(0) - P(1), for both circuits.
struct AncillaExpectations {
    double real_part;
    double imag_part;
};

// Both ancilla Hadamards are applied unnormalized, [[1, 1], [1, -1]], and
// the two factors 1/sqrt(2) are restored as an exact 1/4 at readout. This
// keeps e.g. the t = 0 estimate at exactly 1 + 0i.
double readout(std::span<const Complex> lo, std::span<const Complex> hi,
               Complex phase) {
    double z = 0.0;
    for (std::size_t j = 0; j < lo.size(); ++j) {
        const Complex b = phase * hi[j];
        z += std::norm(lo[j] + b) - std::norm(lo[j] - b);
    }
    return 0.25 * z;
}

AncillaExpectations run_hadamard_circuits(std::size_t position,
                                          const TrotterConfig &config,
                                          const PhysicalParams &params,
                                          const MomentumBasis &basis) {
    Statevector state = prepare_k_state(basis, position);
    {
        auto lo = state.ancilla_block(0);
        auto hi = state.ancilla_block(1);
        std::copy(lo.begin(), lo.end(), hi.begin());
    }
    trotter_evolve(state, config, params, basis, /*controlled=*/true);
    const auto lo = std::as_const(state).ancilla_block(0);
    const auto hi = std::as_const(state).ancilla_block(1);
    // The imaginary-part circuit inserts S^dagger = diag(1, -i) first.
    return {readout(lo, hi, 1.0), readout(lo, hi, Complex{0.0, -1.0})};
}

double sample_expectation(double exact, std::int64_t shots,
                          std::mt19937_64 &rng) {
    const double p0 = std::clamp(0.5 * (1.0 + exact), 0.0, 1.0);
    std::binomial_distribution<std::int64_t> draw(shots, p0);
    const auto zeros = draw(rng);
    return 2.0 * static_cast<double>(zeros) / static_cast<double>(shots) - 1.0;
}

} // namespace

Complex hadamard_test(std::size_t position, const TrotterConfig &config,
                      const EstimatorMode &mode, const PhysicalParams &params,
                      const MomentumBasis &basis) {
    const auto p = run_hadamard_circuits(position, config, params, basis);
    if (const auto *sampled = std::get_if<SampledEstimator>(&mode)) {
        if (sampled->shots < 1)
            throw ArgumentError("hadamard_test: shots must be >= 1");
        std::seed_seq seq{static_cast<std::uint32_t>(sampled->seed),
                          static_cast<std::uint32_t>(sampled->seed >> 32)};
        std::mt19937_64 rng(seq);
        const double re = sample_expectation(p.real_part, sampled->shots, rng);
        const double im = sample_expectation(p.imag_part, sampled->shots, rng);
        return {re, im};
    }
    return {p.real_part, p.imag_part};
}

namespace {

std::uint64_t derive_seed(std::uint64_t seed, std::size_t time_index,
                          std::size_t position) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(time_index),
                      static_cast<std::uint32_t>(time_index >> 32),
                      static_cast<std::uint32_t>(position)};
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (std::uint64_t{out[1]} << 32) | out[0];
}

} // namespace

ComplexSeries correlation_circuit(std::span<const double> times,
                                  const TrotterSchedule &schedule,
                                  const EstimatorMode &mode,
                                  const PhysicalParams &params,
                                  const MomentumBasis &basis) {
    require_register(basis);
    const std::size_t d = basis.dim();
    std::vector<Complex> terms(times.size() * d);
    parallel_for(terms.size(), [&](std::size_t job) {
        const std::size_t ti = job / d;
        const std::size_t pos = job % d;
        EstimatorMode local = mode;
        if (auto *sampled = std::get_if<SampledEstimator>(&local))
            sampled->seed = derive_seed(sampled->seed, ti, pos);
        terms[job] = hadamard_test(pos, schedule.at(times[ti]), local, params,
                                   basis);
    });
    std::vector<Complex> values(times.size());
    for (std::size_t ti = 0; ti < times.size(); ++ti)
        for (std::size_t pos = 0; pos < d; ++pos)
            values[ti] += terms[ti * d + pos];
    const auto provenance = std::holds_alternative<SampledEstimator>(mode)
                                ? Provenance::CircuitSampled
                                : Provenance::CircuitExact;
    return {std::vector<double>(times.begin(), times.end()), std::move(values),
            provenance};
}

} // namespace trapcorr

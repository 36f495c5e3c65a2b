#include "trapcorr/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "trapcorr/error.hpp"
#include "trapcorr/parallel.hpp"

namespace trapcorr {

MomentumBasis::MomentumBasis(double box_length,
                             std::vector<std::int64_t> indices,
                             std::optional<int> num_qubits)
    : box_length_(box_length), indices_(std::move(indices)),
      num_qubits_(num_qubits) {
    if (!(box_length > 0.0))
        throw ArgumentError("basis: box_length must be positive");
    momenta_.reserve(indices_.size());
    for (const auto n : indices_)
        momenta_.push_back(2.0 * std::numbers::pi * static_cast<double>(n) /
                           box_length_);
}

MomentumBasis MomentumBasis::symmetric(double box_length, std::int64_t n_cut) {
    if (n_cut < 0)
        throw ArgumentError("basis: negative cutoff " + std::to_string(n_cut));
    std::vector<std::int64_t> indices(static_cast<std::size_t>(2 * n_cut + 1));
    std::iota(indices.begin(), indices.end(), -n_cut);
    return {box_length, std::move(indices), std::nullopt};
}

MomentumBasis MomentumBasis::qubit(double box_length, int gamma) {
    if (gamma < 1 || gamma > 30)
        throw ArgumentError("basis: qubit count must be in [1, 30], got " +
                            std::to_string(gamma));
    const std::int64_t half = std::int64_t{1} << (gamma - 1);
    std::vector<std::int64_t> indices(static_cast<std::size_t>(2 * half));
    std::iota(indices.begin(), indices.end(), -half + 1);
    return {box_length, std::move(indices), gamma};
}

std::int64_t MomentumBasis::max_abs_index() const noexcept {
    std::int64_t m = 0;
    for (const auto n : indices_)
        m = std::max(m, n < 0 ? -n : n);
    return m;
}

std::size_t MomentumBasis::position_of(std::int64_t n) const {
    const auto it = std::lower_bound(indices_.begin(), indices_.end(), n);
    if (it == indices_.end() || *it != n)
        throw ArgumentError("basis: momentum index " + std::to_string(n) +
                            " outside basis");
    return static_cast<std::size_t>(it - indices_.begin());
}

MomentumBasis build_basis(const PhysicalParams &params, BasisMode mode) {
    if (const auto *q = std::get_if<QubitRegister>(&mode))
        return MomentumBasis::qubit(params.box_length(), q->gamma);
    return MomentumBasis::symmetric(params.box_length(), params.n_cut());
}

double free_pair_energy(double k, const PhysicalParams &params) {
    return k * k / params.mass();
}

HamiltonianMatrix::HamiltonianMatrix(MomentumBasis basis,
                                     Eigen::MatrixXd elements)
    : basis_(std::move(basis)), elements_(std::move(elements)) {
    const auto d = static_cast<Eigen::Index>(basis_.dim());
    if (elements_.rows() != d || elements_.cols() != d)
        throw ArgumentError("hamiltonian: matrix shape does not match basis");
}

HamiltonianMatrix build_hamiltonian(const PhysicalParams &params,
                                    const MomentumBasis &basis) {
    const auto d = static_cast<Eigen::Index>(basis.dim());
    const double coupling = params.v0() / params.box_length();
    Eigen::MatrixXd h = Eigen::MatrixXd::Constant(d, d, coupling);
    const auto k = basis.momenta();
    for (Eigen::Index i = 0; i < d; ++i)
        h(i, i) += free_pair_energy(k[static_cast<std::size_t>(i)], params);
    return {basis, std::move(h)};
}

SpectralDecomposition eigendecompose(const HamiltonianMatrix &h,
                                     Eigenvectors vectors) {
    const Eigen::MatrixXd &m = h.elements();
    const Eigen::Index d = m.rows();

    // Diagonal input (zero coupling): stable sort keeps degenerate +-k levels
    // in basis order, so results are reproducible.
    bool diagonal = true;
    for (Eigen::Index j = 0; j < d && diagonal; ++j)
        for (Eigen::Index i = 0; i < d; ++i)
            if (i != j && m(i, j) != 0.0) {
                diagonal = false;
                break;
            }
    if (diagonal) {
        std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
        std::iota(order.begin(), order.end(), Eigen::Index{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](Eigen::Index a, Eigen::Index b) {
                             return m(a, a) < m(b, b);
                         });
        SpectralDecomposition out;
        out.eigenvalues.resize(d);
        if (vectors == Eigenvectors::Compute)
            out.eigenvectors = Eigen::MatrixXd::Zero(d, d);
        for (Eigen::Index j = 0; j < d; ++j) {
            const auto src = order[static_cast<std::size_t>(j)];
            out.eigenvalues(j) = m(src, src);
            if (out.eigenvectors)
                (*out.eigenvectors)(src, j) = 1.0;
        }
        return out;
    }

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        m, vectors == Eigenvectors::Compute ? Eigen::ComputeEigenvectors
                                            : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("eigendecompose: symmetric eigensolver did not "
                               "converge (dimension " +
                               std::to_string(d) + ")");
    SpectralDecomposition out;
    out.eigenvalues = solver.eigenvalues();
    if (vectors == Eigenvectors::Compute)
        out.eigenvectors = solver.eigenvectors();
    return out;
}

namespace {

ComplexSeries spectral_sum(std::span<const double> levels,
                           std::span<const double> times,
                           Provenance provenance) {
    std::vector<Complex> values(times.size());
    parallel_for(times.size(), [&](std::size_t i) {
        const double t = times[i];
        double re = 0.0;
        double im = 0.0;
        for (const double e : levels) {
            re += std::cos(e * t);
            im -= std::sin(e * t);
        }
        values[i] = {re, im};
    });
    return {std::vector<double>(times.begin(), times.end()), std::move(values),
            provenance};
}

} // namespace

ComplexSeries correlation_exact(const SpectralDecomposition &decomp,
                                std::span<const double> times) {
    const auto &ev = decomp.eigenvalues;
    return spectral_sum({ev.data(), static_cast<std::size_t>(ev.size())},
                        times, Provenance::Exact);
}

ComplexSeries correlation_free(const MomentumBasis &basis,
                               const PhysicalParams &params,
                               std::span<const double> times) {
    std::vector<double> levels;
    levels.reserve(basis.dim());
    for (const double k : basis.momenta())
        levels.push_back(free_pair_energy(k, params));
    return spectral_sum(levels, times, Provenance::Exact);
}

} // namespace trapcorr

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "trapcorr/model.hpp"
#include "trapcorr/series.hpp"

namespace trapcorr {

/// Indices -N..N, dimension 2N+1.
struct SymmetricCutoff {};

/// Indices -2^(gamma-1)+1 .. 2^(gamma-1), dimension 2^gamma, so that the
/// basis fills a gamma-qubit register exactly.
struct QubitRegister {
    int gamma;
};

using BasisMode = std::variant<SymmetricCutoff, QubitRegister>;

/// Relative momenta k_n = 2 pi n / L of the two-fermion |k> states, sorted
/// ascending. Position 0 is the most negative momentum.
class MomentumBasis {
  public:
    static MomentumBasis symmetric(double box_length, std::int64_t n_cut);
    static MomentumBasis qubit(double box_length, int gamma);

    [[nodiscard]] double box_length() const noexcept { return box_length_; }
    [[nodiscard]] std::span<const std::int64_t> indices() const & noexcept {
        return indices_;
    }
    [[nodiscard]] std::span<const double> momenta() const & noexcept {
        return momenta_;
    }
    std::span<const std::int64_t> indices() const && = delete;
    std::span<const double> momenta() const && = delete;
    [[nodiscard]] std::size_t dim() const noexcept { return indices_.size(); }
    /// Qubit count for register-mode bases, empty otherwise.
    [[nodiscard]] std::optional<int> num_qubits() const noexcept {
        return num_qubits_;
    }
    /// Largest |n| in the basis; the effective momentum cutoff index.
    [[nodiscard]] std::int64_t max_abs_index() const noexcept;
    /// Position of index n in the basis. Throws ArgumentError if absent.
    [[nodiscard]] std::size_t position_of(std::int64_t n) const;

  private:
    MomentumBasis(double box_length, std::vector<std::int64_t> indices,
                  std::optional<int> num_qubits);

    double box_length_;
    std::vector<std::int64_t> indices_;
    std::vector<double> momenta_;
    std::optional<int> num_qubits_;
};

/// Throws ArgumentError for gamma < 1 (or > 30) in qubit mode.
[[nodiscard]] MomentumBasis build_basis(const PhysicalParams &params,
                                        BasisMode mode);

/// Energy 2 eps0_k = k^2 / m of the free two-particle state |k>.
[[nodiscard]] double free_pair_energy(double k, const PhysicalParams &params);

/// H = diag(k^2/m) + (v0/L) J in the |k> basis, J the all-ones matrix.
class HamiltonianMatrix {
  public:
    HamiltonianMatrix(MomentumBasis basis, Eigen::MatrixXd elements);

    [[nodiscard]] const MomentumBasis &basis() const noexcept { return basis_; }
    [[nodiscard]] const Eigen::MatrixXd &elements() const noexcept {
        return elements_;
    }
    [[nodiscard]] std::size_t dim() const noexcept { return basis_.dim(); }

  private:
    MomentumBasis basis_;
    Eigen::MatrixXd elements_;
};

[[nodiscard]] HamiltonianMatrix build_hamiltonian(const PhysicalParams &params,
                                                  const MomentumBasis &basis);

enum class Eigenvectors { Compute, Skip };

/// H = S diag(eps) S^T with eigenvalues ascending. Eigenvectors are optional
/// because the correlation function only needs the spectrum and computing S
/// dominates the cost at large dimension.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;
    std::optional<Eigen::MatrixXd> eigenvectors;
};

/// Throws ConvergenceError if the symmetric eigensolver fails.
[[nodiscard]] SpectralDecomposition
eigendecompose(const HamiltonianMatrix &h,
               Eigenvectors vectors = Eigenvectors::Compute);

/// C(t) = sum over eigenvalues of exp(-i eps t).
[[nodiscard]] ComplexSeries
correlation_exact(const SpectralDecomposition &decomp,
                  std::span<const double> times);

/// C0(t) = sum_k exp(-i k^2 t / m), no diagonalization.
[[nodiscard]] ComplexSeries correlation_free(const MomentumBasis &basis,
                                             const PhysicalParams &params,
                                             std::span<const double> times);

} // namespace trapcorr

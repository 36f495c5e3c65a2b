#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "support/oracles.hpp"
#include "trapcorr/error.hpp"
#include "trapcorr/hamiltonian.hpp"

using namespace trapcorr;

TEST_CASE("momentum bases") {
    const PhysicalParams p{1.0, 2.0, 2 * std::numbers::pi, 1};

    SUBCASE("symmetric") {
        const auto b = build_basis(p, SymmetricCutoff{});
        REQUIRE(b.dim() == 3);
        CHECK(b.momenta()[0] == doctest::Approx(-1.0));
        CHECK(b.momenta()[1] == 0.0);
        CHECK(b.momenta()[2] == doctest::Approx(1.0));
        CHECK_FALSE(b.num_qubits().has_value());
        CHECK(b.position_of(0) == 1);
        CHECK_THROWS_AS((void)b.position_of(2), ArgumentError);
    }
    SUBCASE("qubit register grid is asymmetric") {
        const auto b = build_basis(p, QubitRegister{2});
        REQUIRE(b.dim() == 4);
        const double want[] = {-1, 0, 1, 2};
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(b.indices()[i] == static_cast<std::int64_t>(want[i]));
            CHECK(b.momenta()[i] == doctest::Approx(want[i]));
        }
        CHECK(*b.num_qubits() == 2);
        CHECK(b.max_abs_index() == 2);
    }
    SUBCASE("N = 300 cutoff") {
        const auto b = build_basis(PhysicalParams{2.5, 2.0, 90.0, 300},
                                   SymmetricCutoff{});
        CHECK(b.dim() == 601);
        CHECK(b.momenta().back() == doctest::Approx(2 * std::numbers::pi * 300 / 90));
        CHECK(b.momenta().back() == doctest::Approx(20.944).epsilon(1e-4));
        for (std::size_t i = 1; i < b.dim(); ++i)
            CHECK(b.momenta()[i] > b.momenta()[i - 1]);
    }
    SUBCASE("invalid") {
        CHECK_THROWS_AS((void)build_basis(p, QubitRegister{0}), ArgumentError);
        CHECK_THROWS_AS((void)MomentumBasis::symmetric(1.0, -1), ArgumentError);
    }
}

TEST_CASE("hamiltonian matrix") {
    SUBCASE("free theory is diagonal with k^2/m") {
        const PhysicalParams p{0.0, 2.0, 5.0, 4};
        const auto h = build_hamiltonian(p, build_basis(p, SymmetricCutoff{}));
        for (Eigen::Index i = 0; i < 9; ++i)
            for (Eigen::Index j = 0; j < 9; ++j) {
                const double k = h.basis().momenta()[static_cast<std::size_t>(i)];
                CHECK(h.elements()(i, j) == (i == j ? k * k / 2.0 : 0.0));
            }
    }
    SUBCASE("single mode") {
        const PhysicalParams p{3.0, 1.0, 7.0, 0};
        const auto h = build_hamiltonian(p, build_basis(p, SymmetricCutoff{}));
        REQUIRE(h.dim() == 1);
        CHECK(h.elements()(0, 0) == doctest::Approx(3.0 / 7.0));
    }
    SUBCASE("constant coupling, symmetric, diagonal 2 eps0 + v0/L") {
        const PhysicalParams p{2.5, 2.0, 90.0, 300};
        const auto h = build_hamiltonian(p, build_basis(p, SymmetricCutoff{}));
        const auto &m = h.elements();
        CHECK(m(0, 1) == doctest::Approx(0.027778).epsilon(1e-4));
        CHECK((m - m.transpose()).cwiseAbs().maxCoeff() == 0.0);
        for (Eigen::Index i = 0; i < m.rows(); i += 37)
            for (Eigen::Index j = 0; j < m.cols(); j += 41) {
                const double k = h.basis().momenta()[static_cast<std::size_t>(i)];
                const double want = 2.5 / 90.0 + (i == j ? k * k / 2.0 : 0.0);
                CHECK(m(i, j) == doctest::Approx(want).epsilon(1e-15));
            }
    }
}

TEST_CASE("eigendecomposition") {
    SUBCASE("free levels, degenerate pairs in basis order") {
        const PhysicalParams p{0.0, 2.0, 3.0, 3};
        const auto h = build_hamiltonian(p, build_basis(p, SymmetricCutoff{}));
        const auto d = eigendecompose(h);
        std::vector<double> free;
        for (double k : h.basis().momenta())
            free.push_back(k * k / 2.0);
        std::sort(free.begin(), free.end());
        for (std::size_t i = 0; i < free.size(); ++i)
            CHECK(d.eigenvalues(static_cast<Eigen::Index>(i)) == free[i]);
        // Level k^2 appears for n = -1 then n = +1.
        const auto &s = *d.eigenvectors;
        CHECK(s(2, 1) == 1.0); // position 2 is n = -1
        CHECK(s(4, 2) == 1.0); // position 4 is n = +1
    }
    SUBCASE("2x2 closed form") {
        const PhysicalParams p{0.8, 2.0, 2.0, 0};
        const auto b = MomentumBasis::qubit(2.0, 1); // indices 0, 1
        const auto h = build_hamiltonian(p, b);
        const auto dec = eigendecompose(h);
        const auto [lo, hi] = testing::eig2x2(h.elements()(0, 0),
                                              h.elements()(1, 1),
                                              h.elements()(0, 1));
        CHECK(dec.eigenvalues(0) == doctest::Approx(lo).epsilon(1e-14));
        CHECK(dec.eigenvalues(1) == doctest::Approx(hi).epsilon(1e-14));
    }
    SUBCASE("D = 601 residual and orthogonality") {
        const PhysicalParams p{2.5, 2.0, 90.0, 300};
        const auto h = build_hamiltonian(p, build_basis(p, SymmetricCutoff{}));
        const auto d = eigendecompose(h);
        const auto &s = *d.eigenvectors;
        const double hmax = h.elements().cwiseAbs().maxCoeff();
        const Eigen::MatrixXd recon = s * d.eigenvalues.asDiagonal() * s.transpose();
        CHECK((recon - h.elements()).cwiseAbs().maxCoeff() <= 1e-10 * hmax);
        const Eigen::MatrixXd gram = s.transpose() * s;
        CHECK((gram - Eigen::MatrixXd::Identity(601, 601)).cwiseAbs().maxCoeff() <=
              1e-12);
        CHECK(d.eigenvalues(0) > 0.0);
        for (Eigen::Index i = 1; i < d.eigenvalues.size(); ++i)
            CHECK(d.eigenvalues(i) >= d.eigenvalues(i - 1));
        // The eigenvalue-only path gives the same spectrum.
        const auto values = eigendecompose(h, Eigenvectors::Skip);
        CHECK_FALSE(values.eigenvectors.has_value());
        CHECK((values.eigenvalues - d.eigenvalues).cwiseAbs().maxCoeff() <
              1e-10 * hmax);
    }
    SUBCASE("repulsive coupling lifts every level") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> u(0.05, 5.0);
        for (int trial = 0; trial < 20; ++trial) {
            const PhysicalParams p{u(rng), u(rng), u(rng) * 4, 1 + trial % 7};
            const auto b = build_basis(p, SymmetricCutoff{});
            const auto e = eigendecompose(build_hamiltonian(p, b), Eigenvectors::Skip);
            const auto e0 = eigendecompose(build_hamiltonian(p.with_v0(0.0), b),
                                           Eigenvectors::Skip);
            for (Eigen::Index i = 0; i < e.eigenvalues.size(); ++i)
                CHECK(e.eigenvalues(i) >= e0.eigenvalues(i) - 1e-12);
        }
    }
}

TEST_CASE("integrated correlation functions") {
    SUBCASE("trace at t = 0") {
        const PhysicalParams p{2.5, 2.0, 9.0, 6};
        const auto b = build_basis(p, SymmetricCutoff{});
        const double t0[] = {0.0};
        const auto c = correlation_exact(
            eigendecompose(build_hamiltonian(p, b), Eigenvectors::Skip), t0);
        CHECK(c.values()[0] == Complex{13.0, 0.0});
        const auto c0 = correlation_free(b, p, t0);
        CHECK(c0.values()[0] == Complex{13.0, 0.0});
        CHECK(c.provenance() == Provenance::Exact);
    }
    SUBCASE("single k = 0 mode is constant") {
        const PhysicalParams p{0.0, 1.0, 3.0, 0};
        const auto b = build_basis(p, SymmetricCutoff{});
        const std::vector<double> ts{0.0, 0.3, 10.0};
        const auto c0 = correlation_free(b, p, ts);
        for (const auto v : c0.values())
            CHECK(v == Complex{1.0, 0.0});
    }
    SUBCASE("free spectral sum, exact and direct agree") {
        const PhysicalParams p{0.0, 2.0, 4.0, 12};
        const auto b = build_basis(p, SymmetricCutoff{});
        const std::vector<double> ts{0.0, 0.11, 0.5, 1.7, 9.0};
        const auto exact = correlation_exact(
            eigendecompose(build_hamiltonian(p, b), Eigenvectors::Skip), ts);
        const auto direct = correlation_free(b, p, ts);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            Complex want = 0.0;
            for (double k : b.momenta())
                want += std::exp(Complex{0.0, -k * k / 2.0 * ts[i]});
            CHECK(std::abs(direct.values()[i] - want) < 1e-12);
            CHECK(std::abs(exact.values()[i] - direct.values()[i]) < 1e-12);
        }
    }
    SUBCASE("trace of the matrix exponential, |C| <= D, C(-t) = conj C(t)") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> u(0.1, 3.0);
        for (int trial = 0; trial < 12; ++trial) {
            const PhysicalParams p{u(rng), u(rng), 2.0 + u(rng), trial % 8};
            const auto b = build_basis(p, SymmetricCutoff{});
            const auto h = build_hamiltonian(p, b);
            const auto dec = eigendecompose(h, Eigenvectors::Skip);
            const std::vector<double> ts{-2.9, -1.3, -0.4, 0.4, 1.3, 2.9};
            const auto c = correlation_exact(dec, ts);
            const double d = static_cast<double>(b.dim());
            for (std::size_t i = 0; i < ts.size(); ++i) {
                const Complex trace = testing::propagator(h.elements(), ts[i]).trace();
                CHECK(std::abs(c.values()[i] - trace) <= 1e-10 * d);
                CHECK(std::abs(c.values()[i]) <= d + 1e-12);
            }
            for (std::size_t i = 0; i < 3; ++i)
                CHECK(std::abs(c.values()[i] - std::conj(c.values()[ts.size() - 1 - i])) <
                      1e-12);
        }
    }
}

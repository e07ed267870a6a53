#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "projnorm/eigen.hpp"
#include "projnorm/matrix.hpp"
#include "projnorm/matrix_poly.hpp"
#include "projnorm/rng.hpp"

namespace {

using namespace projnorm::linalg;
using projnorm::Rng;
using projnorm::poly::IntPolynomial;

ComplexMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix m(n);
    for (auto& z : m.entries()) {
        z = rng.complex_normal();
    }
    return m;
}

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
    const ComplexMatrix m = random_matrix(n, seed);
    return m + adjoint(m);
}

const ComplexMatrix kA{{1.0, 0.0}, {0.0, 0.0}};
const ComplexMatrix kB{{0.5, 0.5}, {0.5, 0.5}};

TEST(MatMul, IdentityTimesIdentity) {
    EXPECT_EQ(mat_mul(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
              ComplexMatrix::identity(2));
}

TEST(MatMul, ZeroAnnihilates) {
    const ComplexMatrix a = random_matrix(5, 3);
    EXPECT_EQ(mat_mul(a, ComplexMatrix::zero(5)), ComplexMatrix::zero(5));
}

TEST(MatMul, RemarkPairProduct) {
    const ComplexMatrix expected{{0.5, 0.5}, {0.0, 0.0}};
    EXPECT_EQ(mat_mul(kA, kB), expected);
}

TEST(MatMul, AgreesWithNaiveLoop) {
    const ComplexMatrix a = random_matrix(7, 11);
    const ComplexMatrix b = random_matrix(7, 12);
    EXPECT_LE(max_abs(mat_mul(a, b) - oracle::naive_mul(a, b)), 1e-13);
}

TEST(MatMul, DimensionMismatchThrows) {
    EXPECT_THROW(mat_mul(ComplexMatrix(2), ComplexMatrix(3)), DimensionError);
}

TEST(Adjoint, Basics) {
    EXPECT_EQ(adjoint(ComplexMatrix::identity(3)), ComplexMatrix::identity(3));
    const ComplexMatrix nil{{0.0, 1.0}, {0.0, 0.0}};
    const ComplexMatrix nil_t{{0.0, 0.0}, {1.0, 0.0}};
    EXPECT_EQ(adjoint(nil), nil_t);
    const ComplexMatrix a = random_matrix(6, 5);
    EXPECT_EQ(adjoint(adjoint(a)), a);
    EXPECT_EQ(adjoint(a)(1, 4), std::conj(a(4, 1)));
}

TEST(ComplexMatrixType, RejectsNonFiniteEntries) {
    EXPECT_THROW(ComplexMatrix(1, 1, {Complex(std::nan(""), 0.0)}), std::invalid_argument);
    EXPECT_THROW(ComplexMatrix(2, 2, {Complex(1.0)}), DimensionError);
}

TEST(HermitianEigen, DiagonalInput) {
    const ComplexMatrix d{{3.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 2.0}};
    const auto e = hermitian_eigen(d);
    ASSERT_EQ(e.eigenvalues.size(), 3u);
    EXPECT_DOUBLE_EQ(e.eigenvalues[0], 3.0);
    EXPECT_DOUBLE_EQ(e.eigenvalues[1], 2.0);
    EXPECT_DOUBLE_EQ(e.eigenvalues[2], 1.0);
}

TEST(HermitianEigen, RankOneProjection) {
    const auto e = hermitian_eigen(kB);
    EXPECT_NEAR(e.eigenvalues[0], 1.0, 1e-15);
    EXPECT_NEAR(e.eigenvalues[1], 0.0, 1e-15);
}

TEST(HermitianEigen, RemarkPairCompression) {
    // fgf = a·b·a for the 2×2 pair; oracle is the closed-form 2×2 spectrum.
    const ComplexMatrix fgf = mat_mul(mat_mul(kA, kB), kA);
    const auto [hi, lo] = oracle::hermitian_2x2_eigenvalues(fgf(0, 0).real(), fgf(0, 1),
                                                            fgf(1, 1).real());
    const auto e = hermitian_eigen(fgf);
    EXPECT_NEAR(e.eigenvalues[0], hi, 1e-15);
    EXPECT_NEAR(e.eigenvalues[1], lo, 1e-15);
    EXPECT_NEAR(e.eigenvalues[0], 0.5, 1e-15);
    EXPECT_NEAR(e.eigenvalues[1], 0.0, 1e-15);
}

TEST(HermitianEigen, ComplexTwoByTwoMatchesQuadraticFormula) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const ComplexMatrix h = random_hermitian(2, seed);
        const auto [hi, lo] =
            oracle::hermitian_2x2_eigenvalues(h(0, 0).real(), h(0, 1), h(1, 1).real());
        const auto e = hermitian_eigen(h);
        EXPECT_NEAR(e.eigenvalues[0], hi, 1e-13);
        EXPECT_NEAR(e.eigenvalues[1], lo, 1e-13);
    }
}

TEST(HermitianEigen, RejectsNonHermitian) {
    const ComplexMatrix a{{1.0, 1.0}, {0.0, 0.0}};
    EXPECT_THROW(hermitian_eigen(a), NotHermitianError);
}

TEST(HermitianEigen, ReconstructionAndUnitarity) {
    for (std::size_t n : {1u, 2u, 5u, 16u, 33u, 64u}) {
        const ComplexMatrix h = random_hermitian(n, 100 + n);
        const auto e = hermitian_eigen(h);
        const double scale = std::max(1.0, spectral_norm(h));
        EXPECT_LE(spectral_norm(h - reconstruct(e)), 1e-10 * scale) << "n = " << n;
        const ComplexMatrix gram = mat_mul(adjoint(e.eigenvectors), e.eigenvectors);
        EXPECT_LE(max_abs(gram - ComplexMatrix::identity(n)), kEigenTol) << "n = " << n;
        EXPECT_TRUE(std::is_sorted(e.eigenvalues.rbegin(), e.eigenvalues.rend()));
        for (std::size_t i = 0; i < n; ++i) {
            const ComplexMatrix v = e.eigenvectors.block(0, i, n, 1);
            const ComplexMatrix r = mat_mul(h, v) - v * Complex(e.eigenvalues[i]);
            EXPECT_LE(frobenius_norm(r), kEigenTol * scale);
        }
    }
}

TEST(HermitianEigen, Deterministic) {
    const ComplexMatrix h = random_hermitian(20, 9);
    const auto e1 = hermitian_eigen(h);
    const auto e2 = hermitian_eigen(h);
    EXPECT_EQ(e1.eigenvalues, e2.eigenvalues);
    EXPECT_EQ(e1.eigenvectors, e2.eigenvectors);
}

TEST(SpectralNorm, Examples) {
    EXPECT_NEAR(spectral_norm(ComplexMatrix::identity(4)), 1.0, 1e-15);
    EXPECT_EQ(spectral_norm(ComplexMatrix::zero(3)), 0.0);
    const ComplexMatrix a{{1.0, 1.0}, {0.0, 0.0}};
    EXPECT_NEAR(spectral_norm(a), std::numbers::sqrt2, 1e-15);
}

TEST(SpectralNorm, MatchesPowerIteration) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ComplexMatrix a = random_matrix(6, 40 + seed);
        EXPECT_NEAR(spectral_norm(a), oracle::power_iteration_norm(a), 1e-8);
    }
}

TEST(SpectralNorm, AdjointInvariantAndSubmultiplicative) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n = 2 + seed % 9;
        const ComplexMatrix a = random_matrix(n, 200 + seed);
        const ComplexMatrix b = random_matrix(n, 300 + seed);
        EXPECT_NEAR(spectral_norm(adjoint(a)), spectral_norm(a), 1e-12);
        EXPECT_LE(spectral_norm(mat_mul(a, b)), spectral_norm(a) * spectral_norm(b) + 1e-10);
    }
}

TEST(MatPolyEval, Examples) {
    const ComplexMatrix a = random_matrix(4, 77);
    EXPECT_LE(max_abs(mat_poly_eval(IntPolynomial::x(), a) - a), 1e-15);
    EXPECT_EQ(mat_poly_eval(IntPolynomial{1}, a), ComplexMatrix::identity(4));
    EXPECT_EQ(mat_poly_eval(IntPolynomial{}, a), ComplexMatrix::zero(4));

    const ComplexMatrix ab = mat_mul(kA, kB);
    const ComplexMatrix sq = mat_poly_eval(IntPolynomial{0, 0, 1}, ab);
    EXPECT_LE(max_abs(sq - oracle::naive_mul(ab, ab)), 1e-15);
    EXPECT_LE(max_abs(sq - ab * Complex(0.5)), 1e-15);
}

TEST(MatPolyEval, AgreesWithTermwiseOracle) {
    const IntPolynomial p{3, -2, 0, 5, 1, -1};
    const ComplexMatrix a = random_matrix(5, 5) * Complex(0.3);
    const ComplexMatrix expected = oracle::naive_poly({3, -2, 0, 5, 1, -1}, a);
    EXPECT_LE(max_abs(mat_poly_eval(p, a) - expected), 1e-12);
}

TEST(MatPolyEval, LinearInThePolynomial) {
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<projnorm::poly::BigInt> pc;
        std::vector<projnorm::poly::BigInt> qc;
        const auto deg_p = rng.uniform_int(0, 10);
        const auto deg_q = rng.uniform_int(0, 10);
        for (std::uint64_t k = 0; k <= deg_p; ++k) {
            pc.emplace_back(static_cast<long long>(rng.uniform_int(0, 20)) - 10);
        }
        for (std::uint64_t k = 0; k <= deg_q; ++k) {
            qc.emplace_back(static_cast<long long>(rng.uniform_int(0, 20)) - 10);
        }
        const IntPolynomial p(pc);
        const IntPolynomial q(qc);
        const ComplexMatrix a = random_matrix(4, 500 + trial) * Complex(0.25);
        const ComplexMatrix lhs = mat_poly_eval(p + q, a);
        const ComplexMatrix rhs = mat_poly_eval(p, a) + mat_poly_eval(q, a);
        EXPECT_LE(max_abs(lhs - rhs), 1e-9);
    }
}

}  // namespace

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "projnorm/matrix.hpp"

namespace projnorm::linalg {

/// Relative Hermitian tolerance: ‖A − A*‖ must not exceed this times max(1, ‖A‖_F).
inline constexpr double kHermitianRelTol = 1e-10;
/// Eigenpair residual and unitarity tolerance for decompositions.
inline constexpr double kEigenTol = 1e-9;
/// Jacobi stops once every off-diagonal magnitude is below this times ‖A‖_F.
inline constexpr double kJacobiOffDiagRelTol = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

class NotHermitianError : public std::invalid_argument {
public:
    NotHermitianError(double asymmetry, double tolerance)
        : std::invalid_argument("matrix is not Hermitian: ‖A - A*‖_F = " +
                                std::to_string(asymmetry) +
                                " exceeds " + std::to_string(tolerance)),
          asymmetry_(asymmetry) {}
    double asymmetry() const noexcept { return asymmetry_; }

private:
    double asymmetry_;
};

class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(double off_diagonal)
        : std::runtime_error("Jacobi iteration did not converge; max off-diagonal = " +
                             std::to_string(off_diagonal)),
          off_diagonal_(off_diagonal) {}
    double off_diagonal() const noexcept { return off_diagonal_; }

private:
    double off_diagonal_;
};

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // descending
    ComplexMatrix eigenvectors;       // column i pairs with eigenvalues[i]
};

namespace detail {

inline double hermitian_asymmetry(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            sum += std::norm(a(i, j) - std::conj(a(j, i)));
        }
    }
    return std::sqrt(sum);
}

inline double max_off_diagonal(const ComplexMatrix& a) {
    double m = 0.0;
    const std::size_t n = a.rows();
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            m = std::max(m, std::abs(a(p, q)));
        }
    }
    return m;
}

// Cyclic complex Jacobi. Each rotation first removes the phase of a(p,q),
// then applies the real symmetric rotation that annihilates it. When
// `vectors` is null only the eigenvalues are tracked.
inline std::vector<double> jacobi_sweep_to_convergence(ComplexMatrix& a, ComplexMatrix* vectors) {
    const std::size_t n = a.rows();
    const double threshold = kJacobiOffDiagRelTol * frobenius_norm(a);

    for (int sweep = 0;; ++sweep) {
        const double off = max_off_diagonal(a);
        if (off <= threshold) {
            break;
        }
        if (sweep == kJacobiMaxSweeps) {
            throw ConvergenceError(off);
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= threshold * 1e-3) {
                    continue;
                }
                const Complex phase = apq / mag;  // e^{iφ}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // U restricted to the (p,q) plane: [[c, s], [-s e^{-iφ}, c e^{-iφ}]].
                const Complex u00 = c;
                const Complex u01 = s;
                const Complex u10 = -s * std::conj(phase);
                const Complex u11 = c * std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * u00 + akq * u10;
                    a(k, q) = akp * u01 + akq * u11;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(u00) * apk + std::conj(u10) * aqk;
                    a(q, k) = std::conj(u01) * apk + std::conj(u11) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                if (vectors != nullptr) {
                    ComplexMatrix& v = *vectors;
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex vkp = v(k, p);
                        const Complex vkq = v(k, q);
                        v(k, p) = vkp * u00 + vkq * u10;
                        v(k, q) = vkp * u01 + vkq * u11;
                    }
                }
            }
        }
    }

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = a(i, i).real();
    }
    return values;
}

inline ComplexMatrix checked_hermitian_copy(const ComplexMatrix& a) {
    if (!a.is_square()) {
        throw DimensionError("Hermitian eigenproblem requires a square matrix");
    }
    const double tol = kHermitianRelTol * std::max(1.0, frobenius_norm(a));
    const double asym = hermitian_asymmetry(a);
    if (asym > tol) {
        throw NotHermitianError(asym, tol);
    }
    // Work on the exact Hermitian part so rounding asymmetry cannot leak in.
    ComplexMatrix h = a;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        h(i, i) = h(i, i).real();
        for (std::size_t j = i + 1; j < h.cols(); ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            h(i, j) = avg;
            h(j, i) = std::conj(avg);
        }
    }
    return h;
}

}  // namespace detail

/**
 * Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
 *
 * Eigenvalues come back in descending order with orthonormal eigenvector
 * columns. The result is a deterministic function of the input bits.
 */
inline EigenDecomposition hermitian_eigen(const ComplexMatrix& a) {
    ComplexMatrix work = detail::checked_hermitian_copy(a);
    const std::size_t n = work.rows();
    ComplexMatrix vectors = ComplexMatrix::identity(n);
    const std::vector<double> raw = detail::jacobi_sweep_to_convergence(work, &vectors);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return raw[i] > raw[j]; });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t col = 0; col < n; ++col) {
        out.eigenvalues[col] = raw[order[col]];
        for (std::size_t row = 0; row < n; ++row) {
            out.eigenvectors(row, col) = vectors(row, order[col]);
        }
    }
    return out;
}

/// Eigenvalues only (descending); skips eigenvector accumulation.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
    ComplexMatrix work = detail::checked_hermitian_copy(a);
    std::vector<double> values = detail::jacobi_sweep_to_convergence(work, nullptr);
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

/// Operator norm: square root of the top eigenvalue of A*·A. Empty matrices have norm 0.
inline double spectral_norm(const ComplexMatrix& a) {
    if (a.empty()) {
        return 0.0;
    }
    const ComplexMatrix gram = mat_mul(adjoint(a), a);
    const std::vector<double> values = hermitian_eigenvalues(gram);
    return std::sqrt(std::max(0.0, values.front()));
}

/// diag(values) conjugated by `vectors`: U·diag(λ)·U*.
inline ComplexMatrix reconstruct(const EigenDecomposition& e) {
    const std::size_t n = e.eigenvalues.size();
    ComplexMatrix scaled = e.eigenvectors;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            scaled(i, j) *= e.eigenvalues[j];
        }
    }
    return mat_mul(scaled, adjoint(e.eigenvectors));
}

}  // namespace projnorm::linalg

#pragma once

#include "projnorm/matrix.hpp"
#include "projnorm/polynomial.hpp"

namespace projnorm::linalg {

/// Σ c_k A^k by Horner's rule on matrices. The zero polynomial maps to the zero matrix.
inline ComplexMatrix mat_poly_eval(const poly::IntPolynomial& p, const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    const auto& coeffs = p.coefficients();
    ComplexMatrix acc(n);
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        acc = mat_mul(acc, a);
        const double c = coeffs[k].convert_to<double>();
        for (std::size_t i = 0; i < n; ++i) {
            acc(i, i) += c;
        }
    }
    return acc;
}

/// A^k by repeated multiplication.
inline ComplexMatrix mat_pow(const ComplexMatrix& a, unsigned k) {
    ComplexMatrix out = ComplexMatrix::identity(a.dim());
    for (unsigned i = 0; i < k; ++i) {
        out = mat_mul(out, a);
    }
    return out;
}

}  // namespace projnorm::linalg

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace projnorm::linalg {

using Complex = std::complex<double>;

/// Thrown when operand shapes are incompatible; always a caller bug.
class DimensionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/**
 * Dense row-major complex matrix.
 *
 * Operators in this library are square, but the off-diagonal blocks of a
 * two-projection decomposition are rectangular, so rows and columns are
 * tracked separately. Entries are always finite.
 */
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    explicit ComplexMatrix(std::size_t dim) : ComplexMatrix(dim, dim) {}

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) {
            throw DimensionError("entry count does not match matrix shape");
        }
        for (const auto& z : data_) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw std::invalid_argument("matrix entries must be finite");
            }
        }
    }

    /// Square matrix from nested real rows, e.g. {{1, 0}, {0, 0}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) {
                throw DimensionError("ragged initializer list");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    std::size_t dim() const {
        if (!is_square()) {
            throw DimensionError("dim() requested on a non-square matrix");
        }
        return rows_;
    }

    Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * cols_ + j];
    }

    std::span<const Complex> entries() const noexcept { return data_; }
    std::span<Complex> entries() noexcept { return data_; }

    ComplexMatrix& operator+=(const ComplexMatrix& other) {
        require_same_shape(other, "+=");
        for (std::size_t k = 0; k < data_.size(); ++k) {
            data_[k] += other.data_[k];
        }
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& other) {
        require_same_shape(other, "-=");
        for (std::size_t k = 0; k < data_.size(); ++k) {
            data_[k] -= other.data_[k];
        }
        return *this;
    }

    ComplexMatrix& operator*=(Complex scalar) noexcept {
        for (auto& z : data_) {
            z *= scalar;
        }
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

    /// Copy of the block starting at (row0, col0) with the given shape.
    ComplexMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
                        std::size_t ncols) const {
        if (row0 + nrows > rows_ || col0 + ncols > cols_) {
            throw DimensionError("block extends past matrix bounds");
        }
        ComplexMatrix out(nrows, ncols);
        for (std::size_t i = 0; i < nrows; ++i) {
            for (std::size_t j = 0; j < ncols; ++j) {
                out(i, j) = (*this)(row0 + i, col0 + j);
            }
        }
        return out;
    }

    void set_block(std::size_t row0, std::size_t col0, const ComplexMatrix& src) {
        if (row0 + src.rows() > rows_ || col0 + src.cols() > cols_) {
            throw DimensionError("block extends past matrix bounds");
        }
        for (std::size_t i = 0; i < src.rows(); ++i) {
            for (std::size_t j = 0; j < src.cols(); ++j) {
                (*this)(row0 + i, col0 + j) = src(i, j);
            }
        }
    }

private:
    void require_same_shape(const ComplexMatrix& other, const char* op) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw DimensionError(std::string("shape mismatch in ") + op);
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Plain product; the inner dimensions must agree.
inline ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("mat_mul: inner dimensions differ (" + std::to_string(a.cols()) +
                             " vs " + std::to_string(b.rows()) + ")");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    return mat_mul(a, b);
}

/// Conjugate transpose.
inline ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

inline double frobenius_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (const auto& z : a.entries()) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

/// Largest entry magnitude; a cheap residual measure for exact-zero checks.
inline double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const auto& z : a.entries()) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

inline double trace_real(const ComplexMatrix& a) {
    double t = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        t += a(i, i).real();
    }
    return t;
}

/// Block-diagonal direct sum of square blocks.
inline ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks) {
    std::size_t total = 0;
    for (const auto& b : blocks) {
        total += b.dim();
    }
    ComplexMatrix out(total);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        out.set_block(offset, offset, b);
        offset += b.dim();
    }
    return out;
}

}  // namespace projnorm::linalg

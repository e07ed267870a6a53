#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace projnorm::poly {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when a closed form fails to reduce to the expected integer polynomial.
/// Indicates an implementation defect, never bad input.
class IdentityViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/**
 * Dense univariate polynomial with arbitrary-precision integer coefficients.
 * coefficients()[k] multiplies x^k; trailing zeros are always trimmed, so the
 * zero polynomial has no coefficients.
 */
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
        trim();
    }

    IntPolynomial(std::initializer_list<long long> coefficients) {
        coeffs_.reserve(coefficients.size());
        for (long long c : coefficients) {
            coeffs_.emplace_back(c);
        }
        trim();
    }

    static IntPolynomial constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

    /// c·x^k
    static IntPolynomial monomial(BigInt c, std::size_t k) {
        std::vector<BigInt> coeffs(k + 1);
        coeffs[k] = std::move(c);
        return IntPolynomial(std::move(coeffs));
    }

    static IntPolynomial x() { return monomial(1, 1); }

    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt{0}; }

    IntPolynomial& operator+=(const IntPolynomial& other) {
        if (other.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(other.coeffs_.size());
        }
        for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
            coeffs_[k] += other.coeffs_[k];
        }
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& other) {
        if (other.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(other.coeffs_.size());
        }
        for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
            coeffs_[k] -= other.coeffs_[k];
        }
        trim();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator*(IntPolynomial p, const BigInt& s) {
        for (auto& c : p.coeffs_) {
            c *= s;
        }
        p.trim();
        return p;
    }

    /// Multiply by x^k.
    IntPolynomial shifted(std::size_t k) const {
        if (is_zero()) {
            return {};
        }
        std::vector<BigInt> out(k, BigInt{0});
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return IntPolynomial(std::move(out));
    }

    /// Exact division by an integer; throws IdentityViolation if any coefficient is not divisible.
    IntPolynomial divided_exactly(const BigInt& divisor) const {
        std::vector<BigInt> out(coeffs_.size());
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            BigInt q;
            BigInt r;
            boost::multiprecision::divide_qr(coeffs_[k], divisor, q, r);
            if (r != 0) {
                throw IdentityViolation("coefficient of x^" + std::to_string(k) +
                                        " is not divisible by " + divisor.str());
            }
            out[k] = std::move(q);
        }
        return IntPolynomial(std::move(out));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Decimal strings, index = power. The zero polynomial exports as {"0"}.
    std::vector<std::string> to_decimal_strings() const {
        if (is_zero()) {
            return {"0"};
        }
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) {
            out.push_back(c.str());
        }
        return out;
    }

    /// Human-readable form, highest power first, e.g. "3x^2 + x".
    std::string to_string(char var = 'x') const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<BigInt> coeffs_;
};

/// p^k by repeated multiplication; cheap when p has few terms.
inline IntPolynomial pow(const IntPolynomial& p, unsigned k) {
    IntPolynomial out = IntPolynomial::constant(1);
    for (unsigned i = 0; i < k; ++i) {
        out = out * p;
    }
    return out;
}

inline std::string IntPolynomial::to_string(char var) const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        const BigInt& c = coeffs_[idx];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        const BigInt mag = negative ? BigInt(-c) : c;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1 || idx == 0) {
            out += mag.str();
        }
        if (idx >= 1) {
            out += var;
        }
        if (idx >= 2) {
            out += "^" + std::to_string(idx);
        }
    }
    return out;
}

/// Horner evaluation in double precision.
inline double poly_eval_real(const IntPolynomial& p, double x) {
    double acc = 0.0;
    const auto& c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = acc * x + c[k].convert_to<double>();
    }
    return acc;
}

/**
 * Polynomial in s where x = s². Holds the √x closed forms; converting back to
 * an IntPolynomial in x checks that every odd power of s vanishes and that
 * the stated integer denominator divides each coefficient exactly.
 */
class SqrtRingPolynomial {
public:
    SqrtRingPolynomial() = default;
    explicit SqrtRingPolynomial(IntPolynomial in_s) : in_s_(std::move(in_s)) {}

    /// Embed a polynomial in x by substituting x = s².
    static SqrtRingPolynomial from_x(const IntPolynomial& p) {
        const auto& c = p.coefficients();
        std::vector<BigInt> out(c.empty() ? 0 : 2 * c.size() - 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            out[2 * k] = c[k];
        }
        return SqrtRingPolynomial(IntPolynomial(std::move(out)));
    }

    static SqrtRingPolynomial s() { return SqrtRingPolynomial(IntPolynomial::x()); }
    static SqrtRingPolynomial constant(long long c) {
        return SqrtRingPolynomial(IntPolynomial::constant(c));
    }

    const IntPolynomial& in_s() const noexcept { return in_s_; }

    friend SqrtRingPolynomial operator+(const SqrtRingPolynomial& a, const SqrtRingPolynomial& b) {
        return SqrtRingPolynomial(a.in_s_ + b.in_s_);
    }
    friend SqrtRingPolynomial operator-(const SqrtRingPolynomial& a, const SqrtRingPolynomial& b) {
        return SqrtRingPolynomial(a.in_s_ - b.in_s_);
    }
    friend SqrtRingPolynomial operator*(const SqrtRingPolynomial& a, const SqrtRingPolynomial& b) {
        return SqrtRingPolynomial(a.in_s_ * b.in_s_);
    }
    friend SqrtRingPolynomial pow(const SqrtRingPolynomial& p, unsigned k) {
        return SqrtRingPolynomial(projnorm::poly::pow(p.in_s_, k));
    }

    /// Multiply by s^k.
    SqrtRingPolynomial shifted(std::size_t k) const { return SqrtRingPolynomial(in_s_.shifted(k)); }

    /// (this / denominator) as a polynomial in x = s².
    IntPolynomial to_x_polynomial(const BigInt& denominator = 1) const {
        const auto& c = in_s_.coefficients();
        std::vector<BigInt> even;
        even.reserve(c.size() / 2 + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k % 2 == 1) {
                if (c[k] != 0) {
                    throw IdentityViolation("odd power s^" + std::to_string(k) +
                                            " survives in a closed form that must be a polynomial in x");
                }
                continue;
            }
            even.push_back(c[k]);
        }
        return IntPolynomial(std::move(even)).divided_exactly(denominator);
    }

private:
    IntPolynomial in_s_;
};

/// Binomial coefficient C(n, k) as an exact integer.
inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt out = 1;
    for (unsigned i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

/// P_n and Q_n of the anticommutator power expansion.
struct PQPair {
    IntPolynomial P;
    IntPolynomial Q;
    friend bool operator==(const PQPair&, const PQPair&) = default;
};

/// P_{n+1} = x·P_n + x·Q_n, Q_{n+1} = P_n + x·Q_n, from P_1 = x, Q_1 = 0.
inline PQPair poly_PQ_recursive(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("P_n, Q_n are defined for n >= 1");
    }
    IntPolynomial p = IntPolynomial::x();
    IntPolynomial q;
    for (unsigned k = 1; k < n; ++k) {
        IntPolynomial next_p = (p + q).shifted(1);
        IntPolynomial next_q = p + q.shifted(1);
        p = std::move(next_p);
        q = std::move(next_q);
    }
    return {std::move(p), std::move(q)};
}

/**
 * P_n = (x/2)[(x+√x)^{n-1} + (x-√x)^{n-1}],
 * Q_n = (√x/2)[(x+√x)^{n-1} - (x-√x)^{n-1}],
 * expanded in ℤ[s] with x = s² and reduced back to ℤ[x].
 */
inline PQPair poly_PQ_closed(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("P_n, Q_n are defined for n >= 1");
    }
    using S = SqrtRingPolynomial;
    const S x = S::from_x(IntPolynomial::x());
    const S plus = pow(x + S::s(), n - 1);
    const S minus = pow(x - S::s(), n - 1);
    return {(x * (plus + minus)).to_x_polynomial(2),
            (S::s() * (plus - minus)).to_x_polynomial(2)};
}

/// Even-index binomial sums:
/// P_{2N} = Σ_{ℓ=1..N} C(2N-1, 2ℓ-1) x^{N+ℓ}, Q_{2N} = Σ_{ℓ=0..N-1} C(2N-1, 2ℓ) x^{N+ℓ}.
inline PQPair poly_PQ_even_sums(unsigned N) {
    if (N == 0) {
        throw std::invalid_argument("even-index sums are defined for N >= 1");
    }
    std::vector<BigInt> p(2 * N + 1);
    std::vector<BigInt> q(2 * N + 1);
    for (unsigned l = 1; l <= N; ++l) {
        p[N + l] = binomial(2 * N - 1, 2 * l - 1);
    }
    for (unsigned l = 0; l + 1 <= N; ++l) {
        q[N + l] = binomial(2 * N - 1, 2 * l);
    }
    return {IntPolynomial(std::move(p)), IntPolynomial(std::move(q))};
}

/// F_{n+1} = 2x·F_n + (x - x²)·F_{n-1}, F_0 = 1, F_1 = 2x.
inline IntPolynomial poly_F(unsigned n) {
    IntPolynomial prev = IntPolynomial::constant(1);
    if (n == 0) {
        return prev;
    }
    IntPolynomial cur = IntPolynomial::monomial(2, 1);
    const IntPolynomial two_x = IntPolynomial::monomial(2, 1);
    const IntPolynomial x_minus_x2{0, 1, -1};
    for (unsigned k = 1; k < n; ++k) {
        IntPolynomial next = two_x * cur + x_minus_x2 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// F_n = ½ x^{n/2} [(√x + 1)^{n+1} - (√x - 1)^{n+1}], reduced from ℤ[s].
inline IntPolynomial poly_F_closed(unsigned n) {
    using S = SqrtRingPolynomial;
    const S one = S::constant(1);
    const S diff = pow(S::s() + one, n + 1) - pow(S::s() - one, n + 1);
    return diff.shifted(n).to_x_polynomial(2);
}

/// A_N and B_N as polynomials in a.
struct ABPair {
    IntPolynomial A;
    IntPolynomial B;
    friend bool operator==(const ABPair&, const ABPair&) = default;
};

/// A_N(a) = Σ_{ℓ=1..N} C(2N-1, 2ℓ-1) a^{2ℓ}, B_N(a) = Σ_{ℓ=0..N-1} C(2N-1, 2ℓ) a^{2ℓ}.
inline ABPair poly_AB_sums(unsigned N) {
    if (N == 0) {
        throw std::invalid_argument("A_N, B_N are defined for N >= 1");
    }
    std::vector<BigInt> a(2 * N + 1);
    std::vector<BigInt> b(2 * N + 1);
    for (unsigned l = 1; l <= N; ++l) {
        a[2 * l] = binomial(2 * N - 1, 2 * l - 1);
    }
    for (unsigned l = 0; l + 1 <= N; ++l) {
        b[2 * l] = binomial(2 * N - 1, 2 * l);
    }
    return {IntPolynomial(std::move(a)), IntPolynomial(std::move(b))};
}

/// A_N = (a/2)[(1+a)^{2N-1} - (1-a)^{2N-1}], B_N = ½[(1+a)^{2N-1} + (1-a)^{2N-1}].
inline ABPair poly_AB_closed(unsigned N) {
    if (N == 0) {
        throw std::invalid_argument("A_N, B_N are defined for N >= 1");
    }
    const IntPolynomial plus = pow(IntPolynomial{1, 1}, 2 * N - 1);
    const IntPolynomial minus = pow(IntPolynomial{1, -1}, 2 * N - 1);
    return {(plus - minus).shifted(1).divided_exactly(2), (plus + minus).divided_exactly(2)};
}

/// Binomial-sum forms of A_N, B_N after confirming they equal the closed forms.
inline ABPair poly_AB(unsigned N) {
    ABPair sums = poly_AB_sums(N);
    if (!(sums == poly_AB_closed(N))) {
        throw IdentityViolation("A_N/B_N binomial sums disagree with closed forms at N = " +
                                std::to_string(N));
    }
    return sums;
}

}  // namespace projnorm::poly

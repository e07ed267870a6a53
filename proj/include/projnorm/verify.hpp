#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "projnorm/eigen.hpp"
#include "projnorm/matrix.hpp"
#include "projnorm/matrix_poly.hpp"
#include "projnorm/polynomial.hpp"
#include "projnorm/projections.hpp"

namespace projnorm::verify {

using linalg::ComplexMatrix;
using projections::ProjectionPair;

inline constexpr double kDefaultTol = 1e-8;
inline constexpr unsigned kDefaultPowerMax = 8;

struct Quantity {
    std::string name;
    double value = 0.0;
};

/// Outcome of one check on one pair. `pass` is exactly `residual <= tol`.
struct TrialReport {
    std::string check_name;
    projections::Provenance provenance;
    std::vector<Quantity> quantities;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;

    double quantity(const std::string& name) const {
        for (const auto& q : quantities) {
            if (q.name == name) {
                return q.value;
            }
        }
        throw std::out_of_range("no quantity named " + name);
    }
};

namespace detail {

// The operators every check is phrased in.
struct Products {
    ComplexMatrix fg;
    ComplexMatrix gf;
    ComplexMatrix fgf;
    ComplexMatrix gfg;
    ComplexMatrix anti;  // fg + gf
    ComplexMatrix comm;  // fg − gf
};

inline Products products(const ProjectionPair& pair) {
    Products p;
    p.fg = linalg::mat_mul(pair.f(), pair.g());
    p.gf = linalg::mat_mul(pair.g(), pair.f());
    p.fgf = linalg::mat_mul(p.fg, pair.f());
    p.gfg = linalg::mat_mul(p.gf, pair.g());
    p.anti = p.fg + p.gf;
    p.comm = p.fg - p.gf;
    return p;
}

inline TrialReport finish(std::string name, const ProjectionPair& pair,
                          std::vector<Quantity> quantities, double residual, double tol) {
    TrialReport r;
    r.check_name = std::move(name);
    r.provenance = pair.provenance();
    r.quantities = std::move(quantities);
    r.residual = residual;
    r.tol = tol;
    r.pass = residual <= tol;
    return r;
}

}  // namespace detail

/// ‖fg + gf‖ against ‖fg‖ + ‖fg‖².
inline TrialReport check_theorem(const ProjectionPair& pair, double tol) {
    const auto p = detail::products(pair);
    const double a = linalg::spectral_norm(p.fg);
    const double anti = linalg::spectral_norm(p.anti);
    const double predicted = a + a * a;
    return detail::finish("theorem", pair,
                          {{"norm_fg", a}, {"norm_anti", anti}, {"predicted", predicted}},
                          std::abs(anti - predicted), tol);
}

/// ‖fg‖ − ‖fg‖² ≤ ‖fg − gf‖ ≤ ‖fg‖; residual is the larger violation, or 0.
inline TrialReport check_corollary(const ProjectionPair& pair, double tol) {
    const auto p = detail::products(pair);
    const double a = linalg::spectral_norm(p.fg);
    const double comm = linalg::spectral_norm(p.comm);
    const double lower = a - a * a;
    const double residual = std::max({0.0, lower - comm, comm - a});
    return detail::finish("corollary", pair,
                          {{"norm_fg", a}, {"norm_comm", comm}, {"lower", lower}, {"upper", a}},
                          residual, tol);
}

/**
 * For m = 1..m_max: ‖(fg)^m‖ ≤ ‖fg‖^{2m−1}, and (fg)^m = (fgf)^{m−1}(fg).
 * Also ‖fgf‖ = ‖fg‖².
 */
inline TrialReport check_lemma_product_power(const ProjectionPair& pair, unsigned m_max,
                                             double tol) {
    if (m_max == 0) {
        throw std::invalid_argument("m_max must be at least 1");
    }
    const auto p = detail::products(pair);
    const double a = linalg::spectral_norm(p.fg);
    const double norm_fgf = linalg::spectral_norm(p.fgf);

    double bound_excess = 0.0;
    double identity_residual = 0.0;
    ComplexMatrix power = p.fg;                                    // (fg)^m
    ComplexMatrix fgf_power = ComplexMatrix::identity(pair.dim()); // (fgf)^{m−1}
    for (unsigned m = 1; m <= m_max; ++m) {
        if (m > 1) {
            power = linalg::mat_mul(power, p.fg);
            fgf_power = linalg::mat_mul(fgf_power, p.fgf);
        }
        const double norm_power = linalg::spectral_norm(power);
        bound_excess = std::max(bound_excess, norm_power - std::pow(a, 2.0 * m - 1.0));
        identity_residual = std::max(
            identity_residual, linalg::spectral_norm(power - linalg::mat_mul(fgf_power, p.fg)));
    }
    const double fgf_residual = std::abs(norm_fgf - a * a);
    const double residual = std::max({0.0, bound_excess, identity_residual, fgf_residual});
    return detail::finish("lemma_product_power", pair,
                          {{"norm_fg", a},
                           {"norm_fgf", norm_fgf},
                           {"bound_excess", bound_excess},
                           {"identity_residual", identity_residual},
                           {"m_max", static_cast<double>(m_max)}},
                          residual, tol);
}

/**
 * ‖fg − gf‖ = ‖fg(1−f)‖ ≤ ‖fg‖ with u = fg(1−f):
 * (fg−gf)*(fg−gf) = uu* + u*u, and uu*·u*u = 0.
 */
inline TrialReport check_lemma_commutator(const ProjectionPair& pair, double tol) {
    const auto p = detail::products(pair);
    const ComplexMatrix one_minus_f = ComplexMatrix::identity(pair.dim()) - pair.f();
    const ComplexMatrix u = linalg::mat_mul(p.fg, one_minus_f);
    const ComplexMatrix uus = linalg::mat_mul(u, linalg::adjoint(u));
    const ComplexMatrix usu = linalg::mat_mul(linalg::adjoint(u), u);

    const double comm = linalg::spectral_norm(p.comm);
    const double norm_u = linalg::spectral_norm(u);
    const double a = linalg::spectral_norm(p.fg);
    const double equality = std::abs(comm - norm_u);
    const double upper_excess = std::max(0.0, comm - a);
    const double reconstruction = linalg::spectral_norm(
        linalg::mat_mul(linalg::adjoint(p.comm), p.comm) - (uus + usu));
    const double orthogonality = linalg::spectral_norm(linalg::mat_mul(uus, usu));

    const double residual = std::max({equality, upper_excess, reconstruction, orthogonality});
    return detail::finish("lemma_commutator", pair,
                          {{"norm_comm", comm},
                           {"norm_u", norm_u},
                           {"norm_fg", a},
                           {"reconstruction_residual", reconstruction},
                           {"orthogonality_residual", orthogonality}},
                          residual, tol);
}

/**
 * (fg + gf)^n = P_n(fg) + P_n(gf) + Q_n(fgf) + Q_n(gfg) for n = 1..n_max.
 * Residuals are divided by max(1, ‖fg + gf‖^n).
 */
inline TrialReport check_power_expansion(const ProjectionPair& pair, unsigned n_max, double tol) {
    if (n_max == 0) {
        throw std::invalid_argument("n_max must be at least 1");
    }
    const auto p = detail::products(pair);
    const double anti_norm = linalg::spectral_norm(p.anti);
    double worst = 0.0;
    ComplexMatrix power = ComplexMatrix::identity(pair.dim());
    for (unsigned n = 1; n <= n_max; ++n) {
        power = linalg::mat_mul(power, p.anti);
        const auto pq = poly::poly_PQ_recursive(n);
        const ComplexMatrix expansion =
            linalg::mat_poly_eval(pq.P, p.fg) + linalg::mat_poly_eval(pq.P, p.gf) +
            linalg::mat_poly_eval(pq.Q, p.fgf) + linalg::mat_poly_eval(pq.Q, p.gfg);
        const double scale = std::max(1.0, std::pow(anti_norm, static_cast<double>(n)));
        worst = std::max(worst, linalg::spectral_norm(power - expansion) / scale);
    }
    return detail::finish("power_expansion", pair,
                          {{"norm_anti", anti_norm}, {"n_max", static_cast<double>(n_max)}}, worst,
                          tol);
}

/// Count of adjacent sample pairs on [0, 1] where F_n fails to increase.
inline int monotonicity_violations(const poly::IntPolynomial& p, int samples = 100) {
    int violations = 0;
    double prev = poly::poly_eval_real(p, 0.0);
    for (int i = 1; i < samples; ++i) {
        const double x = static_cast<double>(i) / (samples - 1);
        const double cur = poly::poly_eval_real(p, x);
        if (!(cur > prev)) {
            ++violations;
        }
        prev = cur;
    }
    return violations;
}

/**
 * In the range(f) ⊕ range(f)^⊥ basis the northwest block of (fg + gf)^n is
 * F_n(D) and the northeast block is F_{n−1}(D)·V. Residuals are divided by
 * max(1, ‖fg + gf‖^n). Each F_n must also increase strictly at 100
 * equispaced points of [0, 1]; any failure there forces the check to fail.
 */
inline TrialReport check_nw_block(const ProjectionPair& pair, unsigned n_max, double tol) {
    if (n_max == 0) {
        throw std::invalid_argument("n_max must be at least 1");
    }
    const auto blocks = projections::halmos_decompose(pair, tol);
    const auto p = detail::products(pair);
    const double anti_norm = linalg::spectral_norm(p.anti);
    const std::size_t r = blocks.rank;
    const std::size_t n_dim = pair.dim();
    const ComplexMatrix basis_adj = linalg::adjoint(blocks.basis);

    double nw_worst = 0.0;
    double ne_worst = 0.0;
    int monotone_violations = 0;
    ComplexMatrix power = ComplexMatrix::identity(n_dim);
    poly::IntPolynomial f_prev = poly::poly_F(0);
    for (unsigned n = 1; n <= n_max; ++n) {
        power = linalg::mat_mul(power, p.anti);
        const poly::IntPolynomial f_cur = poly::poly_F(n);
        const ComplexMatrix in_basis =
            linalg::mat_mul(linalg::mat_mul(basis_adj, power), blocks.basis);
        const double scale = std::max(1.0, std::pow(anti_norm, static_cast<double>(n)));
        if (r > 0) {
            const ComplexMatrix nw = in_basis.block(0, 0, r, r);
            nw_worst = std::max(
                nw_worst, linalg::spectral_norm(nw - linalg::mat_poly_eval(f_cur, blocks.D)) / scale);
            if (r < n_dim) {
                const ComplexMatrix ne = in_basis.block(0, r, r, n_dim - r);
                const ComplexMatrix expected =
                    linalg::mat_mul(linalg::mat_poly_eval(f_prev, blocks.D), blocks.V);
                ne_worst = std::max(ne_worst, linalg::spectral_norm(ne - expected) / scale);
            }
        }
        monotone_violations += monotonicity_violations(f_cur);
        f_prev = f_cur;
    }
    double residual = std::max(nw_worst, ne_worst);
    if (monotone_violations > 0) {
        residual = std::numeric_limits<double>::infinity();
    }
    return detail::finish("nw_block", pair,
                          {{"nw_residual", nw_worst},
                           {"ne_residual", ne_worst},
                           {"rank_f", static_cast<double>(r)},
                           {"monotone_violations", static_cast<double>(monotone_violations)}},
                          residual, tol);
}

struct BoundRow {
    unsigned N = 0;
    double upper = 0.0;
    double lower = 0.0;
};

/// Pre-limit upper and lower bounds on ‖fg + gf‖ as functions of a = ‖fg‖.
struct BoundTable {
    double a = 0.0;
    std::vector<BoundRow> rows;
    double limit = 0.0;  // a + a²
};

/// 2^{1/2N}·a·(1+a)^{1−1/2N}
inline double upper_bound(double a, unsigned N) {
    const double inv = 1.0 / (2.0 * N);
    return std::pow(2.0, inv) * a * std::pow(1.0 + a, 1.0 - inv);
}

/// 2^{−1/n}·a·(a+1)^{1+1/n}·[1 − ((a−1)/(a+1))^{n+1}]^{1/n}
inline double lower_bound(double a, unsigned n) {
    const double inv = 1.0 / n;
    const double ratio = (a - 1.0) / (a + 1.0);
    const double bracket = 1.0 - std::pow(ratio, static_cast<double>(n + 1));
    return std::pow(2.0, -inv) * a * std::pow(1.0 + a, 1.0 + inv) * std::pow(bracket, inv);
}

inline BoundTable bound_sequences(double a, unsigned n_max) {
    if (!(a >= 0.0 && a <= 1.0)) {
        throw std::invalid_argument("a = " + std::to_string(a) + " is not in [0, 1]");
    }
    if (n_max == 0) {
        throw std::invalid_argument("N_max must be at least 1");
    }
    BoundTable table;
    table.a = a;
    table.limit = a + a * a;
    table.rows.reserve(n_max);
    for (unsigned N = 1; N <= n_max; ++N) {
        BoundRow row{N, upper_bound(a, N), lower_bound(a, N)};
        if (row.upper < table.limit - 1e-12 || row.lower > table.limit + 1e-12) {
            throw std::logic_error("bound table invariant broken at N = " + std::to_string(N));
        }
        table.rows.push_back(row);
    }
    return table;
}

/// lower_N ≤ ‖fg + gf‖ ≤ upper_N for N = 1..n_max, with a the measured ‖fg‖.
inline TrialReport check_bound_sandwich(const ProjectionPair& pair, unsigned n_max, double tol) {
    const auto p = detail::products(pair);
    const double a = std::min(1.0, linalg::spectral_norm(p.fg));
    const double anti = linalg::spectral_norm(p.anti);
    const BoundTable table = bound_sequences(a, n_max);
    double worst = 0.0;
    for (const auto& row : table.rows) {
        worst = std::max({worst, row.lower - anti, anti - row.upper});
    }
    return detail::finish("bound_sandwich", pair,
                          {{"norm_fg", a},
                           {"norm_anti", anti},
                           {"upper_last", table.rows.back().upper},
                           {"lower_last", table.rows.back().lower}},
                          std::max(0.0, worst), tol);
}

/// |‖fg − gf‖² − ‖fg‖²(1 − ‖fg‖²)|; only meaningful for 2×2 pairs.
inline double commutator_identity_violation(const ProjectionPair& pair) {
    const auto p = detail::products(pair);
    const double a = linalg::spectral_norm(p.fg);
    const double comm = linalg::spectral_norm(p.comm);
    return std::abs(comm * comm - a * a * (1.0 - a * a));
}

inline TrialReport check_commutator_identity_2x2(const ProjectionPair& pair, double tol) {
    if (pair.dim() != 2) {
        throw std::invalid_argument("the commutator identity is only asserted for 2x2 pairs");
    }
    const auto p = detail::products(pair);
    const double a = linalg::spectral_norm(p.fg);
    const double comm = linalg::spectral_norm(p.comm);
    return detail::finish("commutator_identity_2x2", pair,
                          {{"norm_fg", a}, {"norm_comm", comm}},
                          std::abs(comm * comm - a * a * (1.0 - a * a)), tol);
}

struct Counterexample {
    ProjectionPair pair;
    double violation = 0.0;
};

/// Angle cells θ = 0 and π/4, padded with further π/4 cells up to `dim`.
inline Counterexample find_commutator_identity_counterexample(std::size_t dim) {
    if (dim < 4 || dim % 2 != 0) {
        throw std::invalid_argument("counterexample dimension must be even and at least 4");
    }
    projections::AngleSpec spec;
    spec.angles.push_back(0.0);
    while (2 * spec.angles.size() < dim) {
        spec.angles.push_back(std::numbers::pi / 4);
    }
    auto pair = projections::pair_from_angles(spec);
    const double violation = commutator_identity_violation(pair);
    return {std::move(pair), violation};
}

/// Largest violation over `budget` random pairs with both ranks dim/2.
inline Counterexample find_commutator_identity_counterexample_random(std::size_t dim, std::size_t budget,
                                                     std::uint64_t seed) {
    if (dim < 4 || dim % 2 != 0) {
        throw std::invalid_argument("counterexample dimension must be even and at least 4");
    }
    if (budget == 0) {
        throw std::invalid_argument("search budget must be positive");
    }
    std::optional<Counterexample> best;
    for (std::size_t i = 0; i < budget; ++i) {
        auto pair = projections::random_pair(dim, dim / 2, dim / 2, seed + i);
        const double v = commutator_identity_violation(pair);
        if (!best || v > best->violation) {
            best = Counterexample{std::move(pair), v};
        }
    }
    return std::move(*best);
}

}  // namespace projnorm::verify

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "projnorm/eigen.hpp"
#include "projnorm/matrix.hpp"
#include "projnorm/rng.hpp"

namespace projnorm::projections {

using linalg::Complex;
using linalg::ComplexMatrix;

/// Tolerance for constructed projections: ‖P² − P‖ and ‖P − P*‖.
inline constexpr double kProjectionTol = 1e-10;

struct ProjectionValidation {
    double idempotence_residual = 0.0;  // ‖P² − P‖_F
    double hermitian_residual = 0.0;    // ‖P − P*‖_F
    bool pass = false;
};

/// Frobenius residuals bound the operator-norm residuals from above.
inline ProjectionValidation validate_projection(const ComplexMatrix& p, double tol) {
    ProjectionValidation v;
    v.idempotence_residual = linalg::frobenius_norm(linalg::mat_mul(p, p) - p);
    v.hermitian_residual = linalg::frobenius_norm(p - linalg::adjoint(p));
    v.pass = v.idempotence_residual <= tol && v.hermitian_residual <= tol;
    return v;
}

class InvalidProjectionError : public std::invalid_argument {
public:
    InvalidProjectionError(const std::string& which, const ProjectionValidation& v)
        : std::invalid_argument(which + " is not a projection: ‖P²-P‖ = " +
                                std::to_string(v.idempotence_residual) +
                                ", ‖P-P*‖ = " + std::to_string(v.hermitian_residual)),
          validation_(v) {}
    const ProjectionValidation& validation() const noexcept { return validation_; }

private:
    ProjectionValidation validation_;
};

enum class PairSource { random, angles, example2x2, universal_grid, file };

inline std::string_view to_string(PairSource s) {
    switch (s) {
        case PairSource::random: return "random";
        case PairSource::angles: return "angles";
        case PairSource::example2x2: return "example2x2";
        case PairSource::universal_grid: return "universal_grid";
        case PairSource::file: return "file";
    }
    return "unknown";
}

/// How a pair was built. Only the fields relevant to `source` are set.
struct Provenance {
    PairSource source = PairSource::file;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> rank_f;
    std::optional<std::size_t> rank_g;
    std::vector<double> angles;
    std::size_t extra_f_dims = 0;
    std::size_t extra_g_dims = 0;
    std::optional<std::size_t> grid_size;
};

/// Two validated projections of equal dimension.
class ProjectionPair {
public:
    static ProjectionPair make(ComplexMatrix f, ComplexMatrix g, Provenance provenance,
                               double tol = kProjectionTol) {
        if (!f.is_square() || !g.is_square() || f.rows() != g.rows() || f.rows() == 0) {
            throw linalg::DimensionError("projection pair needs two square matrices of equal, positive dimension");
        }
        if (auto v = validate_projection(f, tol); !v.pass) {
            throw InvalidProjectionError("f", v);
        }
        if (auto v = validate_projection(g, tol); !v.pass) {
            throw InvalidProjectionError("g", v);
        }
        return ProjectionPair(std::move(f), std::move(g), std::move(provenance));
    }

    const ComplexMatrix& f() const noexcept { return f_; }
    const ComplexMatrix& g() const noexcept { return g_; }
    std::size_t dim() const noexcept { return f_.rows(); }
    const Provenance& provenance() const noexcept { return provenance_; }

private:
    ProjectionPair(ComplexMatrix f, ComplexMatrix g, Provenance p)
        : f_(std::move(f)), g_(std::move(g)), provenance_(std::move(p)) {}

    ComplexMatrix f_;
    ComplexMatrix g_;
    Provenance provenance_;
};

namespace detail {

// Householder QR of a tall n×k matrix; returns the n×k factor with orthonormal columns.
inline ComplexMatrix householder_orthonormalize(ComplexMatrix a) {
    const std::size_t n = a.rows();
    const std::size_t k = a.cols();
    std::vector<std::vector<Complex>> reflectors(k);

    for (std::size_t j = 0; j < k; ++j) {
        double norm_sq = 0.0;
        for (std::size_t i = j; i < n; ++i) {
            norm_sq += std::norm(a(i, j));
        }
        const double norm = std::sqrt(norm_sq);
        if (norm == 0.0) {
            continue;
        }
        const Complex x0 = a(j, j);
        const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex{1.0};
        const Complex alpha = -phase * norm;

        std::vector<Complex> v(n - j);
        for (std::size_t i = j; i < n; ++i) {
            v[i - j] = a(i, j);
        }
        v[0] -= alpha;
        double vnorm_sq = 0.0;
        for (const auto& z : v) {
            vnorm_sq += std::norm(z);
        }
        const double vnorm = std::sqrt(vnorm_sq);
        if (vnorm == 0.0) {
            continue;
        }
        for (auto& z : v) {
            z /= vnorm;
        }
        for (std::size_t c = j; c < k; ++c) {
            Complex w{};
            for (std::size_t i = j; i < n; ++i) {
                w += std::conj(v[i - j]) * a(i, c);
            }
            for (std::size_t i = j; i < n; ++i) {
                a(i, c) -= 2.0 * v[i - j] * w;
            }
        }
        reflectors[j] = std::move(v);
    }

    // Q = H_0 H_1 ... H_{k-1} applied to the first k columns of the identity.
    ComplexMatrix q(n, k);
    for (std::size_t c = 0; c < k; ++c) {
        q(c, c) = 1.0;
    }
    for (std::size_t j = k; j-- > 0;) {
        const auto& v = reflectors[j];
        if (v.empty()) {
            continue;
        }
        for (std::size_t c = 0; c < k; ++c) {
            Complex w{};
            for (std::size_t i = j; i < n; ++i) {
                w += std::conj(v[i - j]) * q(i, c);
            }
            for (std::size_t i = j; i < n; ++i) {
                q(i, c) -= 2.0 * v[i - j] * w;
            }
        }
    }
    return q;
}

inline ComplexMatrix hermitian_part(const ComplexMatrix& a) {
    ComplexMatrix h = a + linalg::adjoint(a);
    h *= 0.5;
    return h;
}

inline void angle_cell(double theta, ComplexMatrix& f, ComplexMatrix& g) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    f = ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}};
    g = ComplexMatrix{{c * c, c * s}, {c * s, s * s}};
}

}  // namespace detail

/**
 * Random orthogonal projection of the given rank: P = Q·Q* with Q the
 * Householder orthonormalization of `rank` i.i.d. complex Gaussian columns.
 * The range is Haar distributed; output is bit-identical for identical arguments.
 */
inline ComplexMatrix random_projection(std::size_t dim, std::size_t rank, std::uint64_t seed) {
    if (dim == 0) {
        throw std::invalid_argument("random_projection: dim must be positive");
    }
    if (rank > dim) {
        throw std::invalid_argument("random_projection: rank " + std::to_string(rank) +
                                    " outside [0, " + std::to_string(dim) + "]");
    }
    if (rank == 0) {
        return ComplexMatrix::zero(dim);
    }
    if (rank == dim) {
        return ComplexMatrix::identity(dim);
    }
    Rng rng(seed);
    ComplexMatrix columns(dim, rank);
    for (std::size_t j = 0; j < rank; ++j) {
        for (std::size_t i = 0; i < dim; ++i) {
            columns(i, j) = rng.complex_normal();
        }
    }
    const ComplexMatrix q = detail::householder_orthonormalize(std::move(columns));
    return detail::hermitian_part(linalg::mat_mul(q, linalg::adjoint(q)));
}

/// Principal angles plus dimensions on which only one projection acts.
struct AngleSpec {
    std::vector<double> angles;
    std::size_t extra_f_dims = 0;
    std::size_t extra_g_dims = 0;
};

/**
 * Canonical pair: one 2×2 cell per angle θ with f = [[1,0],[0,0]] and
 * g = [[cos²θ, cosθ sinθ], [cosθ sinθ, sin²θ]], followed by the extra
 * f-only and g-only dimensions.
 */
inline ProjectionPair pair_from_angles(const AngleSpec& spec) {
    for (double theta : spec.angles) {
        if (!(theta >= 0.0 && theta <= std::numbers::pi / 2)) {
            throw std::invalid_argument("principal angle " + std::to_string(theta) +
                                        " outside [0, pi/2]");
        }
    }
    const std::size_t dim = 2 * spec.angles.size() + spec.extra_f_dims + spec.extra_g_dims;
    if (dim == 0) {
        throw std::invalid_argument("angle spec describes an empty space");
    }
    ComplexMatrix f(dim);
    ComplexMatrix g(dim);
    std::size_t offset = 0;
    for (double theta : spec.angles) {
        ComplexMatrix cf;
        ComplexMatrix cg;
        detail::angle_cell(theta, cf, cg);
        f.set_block(offset, offset, cf);
        g.set_block(offset, offset, cg);
        offset += 2;
    }
    for (std::size_t i = 0; i < spec.extra_f_dims; ++i, ++offset) {
        f(offset, offset) = 1.0;
    }
    for (std::size_t i = 0; i < spec.extra_g_dims; ++i, ++offset) {
        g(offset, offset) = 1.0;
    }
    Provenance prov;
    prov.source = PairSource::angles;
    prov.angles = spec.angles;
    prov.extra_f_dims = spec.extra_f_dims;
    prov.extra_g_dims = spec.extra_g_dims;
    return ProjectionPair::make(std::move(f), std::move(g), std::move(prov));
}

/// a = [[1,0],[0,0]], b = ½[[1,1],[1,1]].
inline ProjectionPair example_2x2_pair() {
    Provenance prov;
    prov.source = PairSource::example2x2;
    return ProjectionPair::make(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}},
                                ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}, std::move(prov));
}

/// Random pair with the given ranks; f and g draw their own seeds from `seed`.
inline ProjectionPair random_pair(std::size_t dim, std::size_t rank_f, std::size_t rank_g,
                                  std::uint64_t seed) {
    Rng rng(seed);
    const std::uint64_t seed_f = rng.next_u64();
    const std::uint64_t seed_g = rng.next_u64();
    Provenance prov;
    prov.source = PairSource::random;
    prov.seed = seed;
    prov.rank_f = rank_f;
    prov.rank_g = rank_g;
    return ProjectionPair::make(random_projection(dim, rank_f, seed_f),
                                random_projection(dim, rank_g, seed_g), std::move(prov));
}

/// Blocks of g relative to range(f) ⊕ range(f)^⊥.
struct HalmosBlocks {
    ComplexMatrix D;       // r×r
    ComplexMatrix Dprime;  // (n−r)×(n−r)
    ComplexMatrix V;       // r×(n−r)
    ComplexMatrix basis;   // unitary; first r columns span range(f)
    std::size_t rank = 0;

    double residual_D = 0.0;       // ‖D − D² − VV*‖
    double residual_cross = 0.0;   // ‖DV + VD′ − V‖
    double residual_Dprime = 0.0;  // ‖D′ − D′² − V*V‖
    double norm_fg_sq = 0.0;       // ‖fg‖²
    double norm_D = 0.0;           // ‖D‖
};

class HalmosError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reassemble basis·[[D, V], [V*, D′]]·basis*.
inline ComplexMatrix reassemble_g(const HalmosBlocks& b) {
    const std::size_t n = b.basis.rows();
    ComplexMatrix m(n);
    m.set_block(0, 0, b.D);
    m.set_block(0, b.rank, b.V);
    m.set_block(b.rank, 0, linalg::adjoint(b.V));
    m.set_block(b.rank, b.rank, b.Dprime);
    return linalg::mat_mul(linalg::mat_mul(b.basis, m), linalg::adjoint(b.basis));
}

/// Reassemble basis·[[I, 0], [0, 0]]·basis*.
inline ComplexMatrix reassemble_f(const HalmosBlocks& b) {
    const std::size_t n = b.basis.rows();
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < b.rank; ++i) {
        m(i, i) = 1.0;
    }
    return linalg::mat_mul(linalg::mat_mul(b.basis, m), linalg::adjoint(b.basis));
}

/**
 * Express g in a basis adapted to f. The range of f is read off the
 * eigenvectors of f with eigenvalue above 1/2; an eigenvalue inside
 * [1/4, 3/4] means f is not numerically a projection and is rejected.
 * Throws HalmosError if a block relation or ‖fg‖² = ‖D‖ fails beyond `tol`.
 */
inline HalmosBlocks halmos_decompose(const ProjectionPair& pair, double tol) {
    const linalg::EigenDecomposition ef = linalg::hermitian_eigen(pair.f());
    const std::size_t n = pair.dim();
    std::size_t r = 0;
    for (double lambda : ef.eigenvalues) {
        if (lambda >= 0.25 && lambda <= 0.75) {
            throw HalmosError("f has eigenvalue " + std::to_string(lambda) +
                              " in [0.25, 0.75]; spectrum is not {0, 1}");
        }
        if (lambda > 0.5) {
            ++r;
        }
    }

    HalmosBlocks b;
    b.rank = r;
    b.basis = ef.eigenvectors;
    const ComplexMatrix gb =
        linalg::mat_mul(linalg::mat_mul(linalg::adjoint(b.basis), pair.g()), b.basis);
    b.D = detail::hermitian_part(gb.block(0, 0, r, r));
    b.Dprime = detail::hermitian_part(gb.block(r, r, n - r, n - r));
    b.V = gb.block(0, r, r, n - r);

    using linalg::adjoint;
    using linalg::mat_mul;
    using linalg::spectral_norm;
    const ComplexMatrix vvs = mat_mul(b.V, adjoint(b.V));
    const ComplexMatrix vsv = mat_mul(adjoint(b.V), b.V);
    b.residual_D = spectral_norm(b.D - mat_mul(b.D, b.D) - vvs);
    b.residual_cross = spectral_norm(mat_mul(b.D, b.V) + mat_mul(b.V, b.Dprime) - b.V);
    b.residual_Dprime = spectral_norm(b.Dprime - mat_mul(b.Dprime, b.Dprime) - vsv);
    const double fg = spectral_norm(mat_mul(pair.f(), pair.g()));
    b.norm_fg_sq = fg * fg;
    b.norm_D = spectral_norm(b.D);

    const auto min_eigen = [](const ComplexMatrix& m) {
        return m.empty() ? 0.0 : linalg::hermitian_eigenvalues(m).back();
    };
    const double min_d = std::min(min_eigen(b.D), min_eigen(b.Dprime));

    const double worst = std::max({b.residual_D, b.residual_cross, b.residual_Dprime,
                                   std::abs(b.norm_fg_sq - b.norm_D), -min_d});
    if (worst > tol) {
        throw HalmosError("block relations violated: D-D^2-VV* = " + std::to_string(b.residual_D) +
                          ", DV+VD'-V = " + std::to_string(b.residual_cross) +
                          ", D'-D'^2-V*V = " + std::to_string(b.residual_Dprime) +
                          ", |fg|^2-|D| = " + std::to_string(b.norm_fg_sq - b.norm_D) +
                          ", min eig = " + std::to_string(min_d));
    }
    return b;
}

/// Norms of a direct sum, taken blockwise as maxima over 2×2 cells.
struct BlockwiseNorms {
    double norm_product = 0.0;        // ‖pq‖
    double norm_commutator = 0.0;     // ‖pq − qp‖
    double norm_anticommutator = 0.0; // ‖pq + qp‖
};

/**
 * Finite stand-in for the universal pair of two projections: a direct sum
 * of angle cells θ_k = k/(K+1)·π/2, k = 1..K, with π/4 always present.
 */
struct UniversalPairApprox {
    std::size_t grid_size = 0;
    std::vector<double> angles;  // ascending

    BlockwiseNorms blockwise_norms() const {
        BlockwiseNorms out;
        for (double theta : angles) {
            ComplexMatrix f;
            ComplexMatrix g;
            detail::angle_cell(theta, f, g);
            const ComplexMatrix fg = linalg::mat_mul(f, g);
            const ComplexMatrix gf = linalg::mat_mul(g, f);
            out.norm_product = std::max(out.norm_product, linalg::spectral_norm(fg));
            out.norm_commutator = std::max(out.norm_commutator, linalg::spectral_norm(fg - gf));
            out.norm_anticommutator =
                std::max(out.norm_anticommutator, linalg::spectral_norm(fg + gf));
        }
        return out;
    }

    /// Dense 2m×2m pair; intended for small grids.
    ProjectionPair materialize() const {
        AngleSpec spec{angles, 0, 0};
        ProjectionPair dense = pair_from_angles(spec);
        Provenance prov = dense.provenance();
        prov.source = PairSource::universal_grid;
        prov.grid_size = grid_size;
        return ProjectionPair::make(dense.f(), dense.g(), std::move(prov));
    }
};

inline UniversalPairApprox universal_pair_approx(std::size_t grid_size) {
    if (grid_size == 0) {
        throw std::invalid_argument("universal_pair_approx: grid size must be positive");
    }
    constexpr double quarter = std::numbers::pi / 4;
    UniversalPairApprox out;
    out.grid_size = grid_size;
    const bool quarter_on_grid = (grid_size + 1) % 2 == 0;
    for (std::size_t k = 1; k <= grid_size; ++k) {
        if (quarter_on_grid && 2 * k == grid_size + 1) {
            out.angles.push_back(quarter);
            continue;
        }
        const double theta =
            static_cast<double>(k) / static_cast<double>(grid_size + 1) * (std::numbers::pi / 2);
        if (!quarter_on_grid && theta > quarter &&
            (out.angles.empty() || out.angles.back() < quarter)) {
            out.angles.push_back(quarter);
        }
        out.angles.push_back(theta);
    }
    return out;
}

}  // namespace projnorm::projections

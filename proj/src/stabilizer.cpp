#include "formstab/stabilizer.hpp"

#include <Eigen/LU>
#include <cmath>
#include <limits>
#include <numeric>

#include "formstab/haar.hpp"

namespace formstab {

namespace {

struct Residuals {
    double s;
    double orth;
};

Residuals residuals_for(const RealMatrix& a, const RealMatrix& s) {
    const Index n = a.rows();
    const double rs = (a.transpose() * s * a - s).norm() / s.norm();
    const double ro = (a.transpose() * a - RealMatrix::Identity(n, n)).norm();
    return {rs, ro};
}

int block_det_signs(const RealMatrix& block_diagonal, const EigenClustering& clusters) {
    int sign = 1;
    Index off = 0;
    for (std::size_t k : clusters.multiplicities) {
        const auto sz = static_cast<Index>(k);
        const RealMatrix block = block_diagonal.block(off, off, sz, sz);
        sign *= Eigen::PartialPivLU<RealMatrix>(block).determinant() < 0.0 ? -1 : 1;
        off += sz;
    }
    return sign;
}

}  // namespace

std::size_t EigenClustering::total() const {
    std::size_t sum = 0;
    for (std::size_t k : multiplicities) sum += k;
    return sum;
}

EigenClustering cluster_eigenvalues(const RealVector& lambda, double cluster_tol) {
    const Index n = lambda.size();
    if (n < 1) {
        throw InvalidArgumentError("cluster_eigenvalues: empty eigenvalue list");
    }
    if (!(cluster_tol >= 0.0)) {
        throw InvalidArgumentError("cluster_eigenvalues: tolerance must be non-negative");
    }
    for (Index i = 1; i < n; ++i) {
        if (lambda(i) < lambda(i - 1)) {
            throw InvalidArgumentError("cluster_eigenvalues: input must be ascending");
        }
    }

    EigenClustering out{{}, {}, Permutation::identity(static_cast<std::size_t>(n)),
                        std::numeric_limits<double>::infinity()};
    Index start = 0;
    for (Index i = 1; i <= n; ++i) {
        if (i == n || lambda(i) - lambda(i - 1) > cluster_tol) {
            const Index len = i - start;
            out.values.push_back(lambda.segment(start, len).mean());
            out.multiplicities.push_back(static_cast<std::size_t>(len));
            if (i < n) {
                out.min_cluster_gap = std::min(out.min_cluster_gap, lambda(i) - lambda(i - 1));
            }
            start = i;
        }
    }
    return out;
}

RealMatrix sample_block_diagonal_orthogonal(const EigenClustering& clusters,
                                            RngStream& rng, const Tolerances& tols) {
    const auto n = static_cast<Index>(clusters.total());
    RealMatrix b = RealMatrix::Zero(n, n);
    Index off = 0;
    for (std::size_t k : clusters.multiplicities) {
        const auto sz = static_cast<Index>(k);
        b.block(off, off, sz, sz) = haar_orthogonal(sz, rng, tols);
        off += sz;
    }
    return b;
}

ComplexMatrix sample_block_diagonal_unitary(const EigenClustering& clusters,
                                            RngStream& rng, const Tolerances& tols) {
    const auto n = static_cast<Index>(clusters.total());
    ComplexMatrix v = ComplexMatrix::Zero(n, n);
    Index off = 0;
    for (std::size_t k : clusters.multiplicities) {
        const auto sz = static_cast<Index>(k);
        v.block(off, off, sz, sz) = haar_unitary(sz, rng, tols);
        off += sz;
    }
    return v;
}

Permutation interleave_permutation(std::size_t n_pairs) {
    if (n_pairs < 1) {
        throw InvalidArgumentError("interleave_permutation: need at least one pair");
    }
    std::vector<std::size_t> image(2 * n_pairs);
    for (std::size_t j = 0; j < n_pairs; ++j) {
        image[2 * j] = j;
        image[2 * j + 1] = n_pairs + j;
    }
    return Permutation(std::move(image));
}

RealMatrix mu_embed(const ComplexMatrix& u) {
    ensure_square(u, "mu_embed");
    const Index n = u.rows();
    RealMatrix out(2 * n, 2 * n);
    out.topLeftCorner(n, n) = u.real();
    out.topRightCorner(n, n) = -u.imag();
    out.bottomLeftCorner(n, n) = u.imag();
    out.bottomRightCorner(n, n) = u.real();
    return out;
}

StabilizerSample generate_symmetric(const BilinearForm& form, RngStream& rng,
                                    const Tolerances& tols) {
    const SymmetricFactorization& fact = form.symmetric_factorization();
    const double ctol = tols.cluster_tol(fact.lambda);
    const EigenClustering clusters = cluster_eigenvalues(fact.lambda, ctol);

    RealMatrix b = sample_block_diagonal_orthogonal(clusters, rng, tols);
    const int det_sign = block_det_signs(b, clusters);
    if (!clusters.grouping.is_identity()) {
        b = conjugate_by_permutation(clusters.grouping.inverse(), b);
    }
    const RealMatrix a = fact.U * b * fact.U.transpose();

    const Residuals res = residuals_for(a, form.matrix());
    return {a,     FormKind::symmetric,       rng.seed(), res.s, res.orth,
            det_sign, clusters.min_cluster_gap < 10.0 * ctol};
}

StabilizerSample generate_skew(const BilinearForm& form, RngStream& rng,
                               const Tolerances& tols) {
    const SkewCanonicalFactorization& fact = form.skew_factorization();
    const auto n_pairs = static_cast<std::size_t>(fact.lambda.size());
    const double ctol = tols.cluster_tol(fact.lambda);
    const EigenClustering clusters = cluster_eigenvalues(fact.lambda, ctol);

    // V commutes with the grouped diagonal; undoing the grouping (an index
    // relabeling, exact) gives a unitary Q commuting with D = diag(lambda).
    ComplexMatrix q = sample_block_diagonal_unitary(clusters, rng, tols);
    if (!clusters.grouping.is_identity()) {
        q = conjugate_by_permutation(clusters.grouping.inverse(), q);
    }
    // mu(Q) stabilizes J = [[0, D], [-D, 0]]; the interleave permutation
    // carries that back to the quasi-diagonal T, and U back to S itself.
    const RealMatrix c = mu_embed(q);
    const Permutation p = interleave_permutation(n_pairs);
    const RealMatrix b = conjugate_by_permutation(p.inverse(), c);
    const RealMatrix a = fact.U * b * fact.U.transpose();

    const Residuals res = residuals_for(a, form.matrix());
    // The unitary image is connected, so the skew construction cannot reach
    // det = -1; tests confirm det(A) = +1 numerically.
    return {a,  FormKind::skew,            rng.seed(), res.s, res.orth,
            +1, clusters.min_cluster_gap < 10.0 * ctol};
}

StabilizerSample generate(const BilinearForm& form, RngStream& rng,
                          const Tolerances& tols) {
    return form.kind() == FormKind::symmetric ? generate_symmetric(form, rng, tols)
                                              : generate_skew(form, rng, tols);
}

}  // namespace formstab

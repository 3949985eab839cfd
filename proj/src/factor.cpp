#include "formstab/factor.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace formstab {

namespace {

// Relative scatter allowed between Gram-matrix eigenvalues that are treated as
// one eigenspace during deflation. Wide enough to absorb the eigensolver's own
// spread on truly repeated eigenvalues; merging nearly-equal distinct values
// keeps each extracted pair S-invariant to machine precision, so the choice is
// uncritical inside [1e3*eps, 1e-8].
constexpr double kGramGroupTolRel = 1e-10;

template <class Matrix>
QrPair<Matrix> qr_positive_impl(const Matrix& m, const Tolerances& tols) {
    using Scalar = typename Matrix::Scalar;
    ensure_square(m, "qr_positive");
    ensure_finite(m, "qr_positive");
    const Index n = m.rows();

    Eigen::HouseholderQR<Matrix> qr(m);
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    Matrix r = qr.matrixQR().template triangularView<Eigen::Upper>();

    double min_diag = std::numeric_limits<double>::infinity();
    double max_diag = 0.0;
    for (Index i = 0; i < n; ++i) {
        const double a = std::abs(r(i, i));
        min_diag = std::min(min_diag, a);
        max_diag = std::max(max_diag, a);
    }
    if (!(max_diag > 0.0) || min_diag <= tols.inv_tol * max_diag) {
        throw SingularInputError(
            "qr_positive: input is numerically rank-deficient");
    }

    // Q <- Q*Lambda, R <- Lambda^-1*R with Lambda = diag(r_ii / |r_ii|). This
    // leaves Q*R untouched and pins down the unique factorization whose R has
    // a real positive diagonal, independent of the Householder sign choices.
    for (Index i = 0; i < n; ++i) {
        const Scalar rii = r(i, i);
        const double a = std::abs(rii);
        const Scalar phase = rii / a;
        q.col(i) *= phase;
        r.row(i) *= Eigen::numext::conj(phase);
        r(i, i) = Scalar(a);
    }
    return {std::move(q), std::move(r)};
}

}  // namespace

RealQrPair qr_positive(const RealMatrix& m, const Tolerances& tols) {
    return qr_positive_impl(m, tols);
}

ComplexQrPair qr_positive(const ComplexMatrix& m, const Tolerances& tols) {
    return qr_positive_impl(m, tols);
}

SymmetricFactorization eigh_symmetric(const RealMatrix& s, const Tolerances& tols) {
    ensure_square(s, "eigh_symmetric");
    ensure_finite(s, "eigh_symmetric");
    const double nrm = s.norm();
    if ((s - s.transpose()).norm() > tols.sym_tol * nrm) {
        throw FormKindError("eigh_symmetric: matrix is not symmetric within tolerance");
    }
    const RealMatrix sym = 0.5 * (s + s.transpose());
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(sym);
    if (es.info() != Eigen::Success) {
        throw SingularInputError("eigh_symmetric: eigensolver did not converge");
    }
    return {es.eigenvectors(), es.eigenvalues()};
}

RealMatrix SkewCanonicalFactorization::canonical_t() const {
    const Index n = U.rows();
    RealMatrix t = RealMatrix::Zero(n, n);
    for (Index j = 0; j < lambda.size(); ++j) {
        t(2 * j, 2 * j + 1) = lambda(j);
        t(2 * j + 1, 2 * j) = -lambda(j);
    }
    return t;
}

SkewCanonicalFactorization skew_canonical(const RealMatrix& s, const Tolerances& tols) {
    ensure_square(s, "skew_canonical");
    ensure_finite(s, "skew_canonical");
    const double nrm = s.norm();
    if ((s + s.transpose()).norm() > tols.sym_tol * nrm) {
        throw FormKindError(
            "skew_canonical: matrix is not skew-symmetric within tolerance");
    }
    const Index n = s.rows();
    if (n % 2 != 0) {
        throw InvalidDimensionError(
            "skew_canonical: invertible skew-symmetric matrices have even size, got " +
            std::to_string(n));
    }

    // S^T S = -S^2 is symmetric positive definite when S is invertible; its
    // eigenvalues are the squared block values, each with even multiplicity.
    RealMatrix gram = s.transpose() * s;
    gram = (0.5 * (gram + gram.transpose())).eval();
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(gram);
    if (es.info() != Eigen::Success) {
        throw SingularInputError("skew_canonical: eigensolver did not converge");
    }
    const RealVector mu = es.eigenvalues();
    const RealMatrix vecs = es.eigenvectors();

    const double mu_max = mu(n - 1);
    if (!(mu_max > 0.0) ||
        std::sqrt(std::max(mu(0), 0.0)) <= tols.inv_tol * std::sqrt(mu_max)) {
        throw SingularInputError("skew_canonical: form is numerically singular");
    }
    const double group_tol = kGramGroupTolRel * mu_max;

    RealMatrix u(n, n);
    std::vector<double> lambdas;
    lambdas.reserve(static_cast<std::size_t>(n / 2));
    Index col = 0;

    // Groups are processed from the largest eigenvalue down: w = -S v / lambda
    // amplifies any cross-eigenspace leakage by 1/lambda, so small-lambda
    // pairs must come last, when the cleanup below can project the leakage
    // onto already-accepted columns.
    Index g1 = n;
    while (g1 > 0) {
        Index g0 = g1 - 1;
        while (g0 > 0 && mu(g0) - mu(g0 - 1) <= group_tol) --g0;
        const Index dim = g1 - g0;
        if (dim % 2 != 0) {
            throw SingularInputError(
                "skew_canonical: eigenspace grouping produced an odd dimension; "
                "the form is too ill-conditioned to factor");
        }

        // Peel (v, w) pairs off the eigenspace basis. w = -S v / ||S v|| is
        // unit and orthogonal to v by the skew structure, and the column pair
        // (v, w) makes U^T S U carry the block [0, lambda; -lambda, 0]. Both
        // vectors are re-orthogonalized against every accepted column: for
        // nearly equal block values the eigensolver mixes the invariant
        // subspaces at the eps/gap level, and without the cleanup that leakage
        // lands in U^T U.
        RealMatrix basis = vecs.middleCols(g0, dim);
        while (basis.cols() > 0) {
            RealVector v = basis.col(0);
            if (col > 0) {
                const auto accepted = u.leftCols(col);
                v -= accepted * (accepted.transpose() * v);
                v.normalize();
            }
            const RealVector sv = s * v;
            const double lam = sv.norm();
            RealVector w = -sv / lam;
            if (col > 0) {
                const auto accepted = u.leftCols(col);
                w -= accepted * (accepted.transpose() * w);
            }
            w -= w.dot(v) * v;
            w.normalize();

            u.col(col) = v;
            u.col(col + 1) = w;
            lambdas.push_back(lam);
            col += 2;

            const Index rest = basis.cols() - 1;
            if (rest <= 1) break;
            RealMatrix remainder = basis.rightCols(rest);
            remainder -= v * (v.transpose() * remainder);
            remainder -= w * (w.transpose() * remainder);
            // rest columns span rest-1 dimensions after the deflation; column
            // pivoting pushes the collapsed direction into the dropped column.
            Eigen::ColPivHouseholderQR<RealMatrix> pqr(remainder);
            basis = RealMatrix(pqr.householderQ() * RealMatrix::Identity(n, rest - 1));
        }
        g1 = g0;
    }

    // Ascending block values; ties keep first-extraction order.
    const auto m = static_cast<Index>(lambdas.size());
    std::vector<Index> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return lambdas[static_cast<std::size_t>(a)] <
                                                    lambdas[static_cast<std::size_t>(b)]; });

    SkewCanonicalFactorization out;
    out.U.resize(n, n);
    out.lambda.resize(m);
    for (Index j = 0; j < m; ++j) {
        const Index src = order[static_cast<std::size_t>(j)];
        out.U.col(2 * j) = u.col(2 * src);
        out.U.col(2 * j + 1) = u.col(2 * src + 1);
        out.lambda(j) = lambdas[static_cast<std::size_t>(src)];
    }
    return out;
}

}  // namespace formstab

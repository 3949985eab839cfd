#pragma once

#include "formstab/matrix.hpp"
#include "formstab/tolerances.hpp"

namespace formstab {

/// Result of the sign-normalized QR factorization M = Q * R. R is upper
/// triangular with exact zeros below the diagonal and a real, strictly
/// positive diagonal; that normalization makes the factorization unique for
/// invertible M.
template <class Matrix>
struct QrPair {
    Matrix Q;
    Matrix R;
};

using RealQrPair = QrPair<RealMatrix>;
using ComplexQrPair = QrPair<ComplexMatrix>;

/// S = U * diag(lambda) * U^T with U orthogonal and lambda ascending.
struct SymmetricFactorization {
    RealMatrix U;
    RealVector lambda;
};

/// S = U * T * U^T with U orthogonal (2N x 2N) and T quasi-diagonal whose j-th
/// 2x2 block is [0, lambda_j; -lambda_j, 0], lambda_j > 0 ascending.
struct SkewCanonicalFactorization {
    RealMatrix U;
    RealVector lambda;

    /// Builds T exactly from lambda (block entries set, everything else zero).
    RealMatrix canonical_t() const;
};

/// Householder QR followed by the sign fix Q <- Q*Lambda, R <- Lambda^-1*R with
/// Lambda = diag(r_ii / |r_ii|), which selects the unique factorization whose
/// R has a positive diagonal. Rank-deficient input (R diagonal collapsing
/// below inv_tol relative) throws SingularInputError, never a silent perturb.
RealQrPair qr_positive(const RealMatrix& m, const Tolerances& tols = {});
ComplexQrPair qr_positive(const ComplexMatrix& m, const Tolerances& tols = {});

/// Symmetric eigendecomposition, eigenvalues ascending, deterministic for a
/// fixed input. Input must be symmetric within sym_tol (relative).
SymmetricFactorization eigh_symmetric(const RealMatrix& s,
                                      const Tolerances& tols = {});

/// Canonical factorization of an invertible skew-symmetric matrix.
///
/// Works on the Gram matrix S^T S = -S^2 (symmetric positive definite): for a
/// unit eigenvector v with eigenvalue lambda^2, the vector w = -S v / lambda
/// is automatically unit and orthogonal to v, and the column pair (v, w) turns
/// U^T S U into the block [0, lambda; -lambda, 0]. Repeated eigenvalues are
/// handled by deflating span{v, w} out of the eigenspace basis and repeating.
/// Pairs are returned with lambda ascending, ties in first-extraction order.
SkewCanonicalFactorization skew_canonical(const RealMatrix& s,
                                          const Tolerances& tols = {});

}  // namespace formstab

#pragma once

#include <cstddef>

#include "formstab/factor.hpp"
#include "formstab/matrix.hpp"
#include "formstab/tolerances.hpp"

namespace formstab {

enum class FormKind { symmetric, skew };

const char* to_string(FormKind kind);

/// A validated invertible symmetric or skew-symmetric form S.
///
/// The stored matrix is exactly (anti)symmetrized, so downstream
/// factorizations see exact structure and re-validation is a bitwise no-op.
/// The factorization produced while estimating invertibility is kept, since
/// generation needs it anyway.
class BilinearForm {
public:
    const RealMatrix& matrix() const { return s_; }
    FormKind kind() const { return kind_; }
    Index size() const { return s_.rows(); }

    /// Smallest singular value (= min |eigenvalue| for symmetric forms,
    /// min block value for skew forms).
    double min_singular_estimate() const { return min_singular_; }

    /// Only valid when kind() == symmetric; throws FormKindError otherwise.
    const SymmetricFactorization& symmetric_factorization() const;
    /// Only valid when kind() == skew; throws FormKindError otherwise.
    const SkewCanonicalFactorization& skew_factorization() const;

    /// Eigenvalues of the cached factorization (symmetric: all N; skew: the N/2
    /// positive block values), ascending.
    const RealVector& spectrum() const;

private:
    friend BilinearForm validate_form(const RealMatrix&, const Tolerances&);

    BilinearForm() = default;

    RealMatrix s_;
    FormKind kind_ = FormKind::symmetric;
    double min_singular_ = 0.0;
    SymmetricFactorization sym_;
    SkewCanonicalFactorization skew_;
};

/// Classifies S as symmetric or skew-symmetric by whichever residual
/// ||S -+ S^T|| is smaller (checked against sym_tol, relative), stores the
/// exactly (anti)symmetrized matrix, and estimates invertibility from the
/// matching factorization.
///
/// Errors: FormKindError when neither residual is within tolerance,
/// InvalidDimensionError for odd-sized skew input, SingularInputError when the
/// smallest singular value falls below inv_tol relative to the largest.
BilinearForm validate_form(const RealMatrix& s, const Tolerances& tols = {});

/// The 2n x 2n block form [0, I_n; -I_n, 0] (kind = skew).
BilinearForm symplectic_form(Index n, const Tolerances& tols = {});

/// diag(+1 x p, -1 x q) of signature (p, q) (kind = symmetric); p + q >= 1.
BilinearForm indefinite_form(Index p, Index q, const Tolerances& tols = {});

}  // namespace formstab

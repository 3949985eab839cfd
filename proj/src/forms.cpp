#include "formstab/forms.hpp"

#include <cmath>
#include <string>

namespace formstab {

const char* to_string(FormKind kind) {
    return kind == FormKind::symmetric ? "symmetric" : "skew-symmetric";
}

const SymmetricFactorization& BilinearForm::symmetric_factorization() const {
    if (kind_ != FormKind::symmetric) {
        throw FormKindError("BilinearForm: form is skew-symmetric, not symmetric");
    }
    return sym_;
}

const SkewCanonicalFactorization& BilinearForm::skew_factorization() const {
    if (kind_ != FormKind::skew) {
        throw FormKindError("BilinearForm: form is symmetric, not skew-symmetric");
    }
    return skew_;
}

const RealVector& BilinearForm::spectrum() const {
    return kind_ == FormKind::symmetric ? sym_.lambda : skew_.lambda;
}

BilinearForm validate_form(const RealMatrix& s, const Tolerances& tols) {
    ensure_square(s, "validate_form");
    ensure_finite(s, "validate_form");

    const double nrm = s.norm();
    const double sym_residual = (s - s.transpose()).norm();
    const double skew_residual = (s + s.transpose()).norm();

    BilinearForm form;
    if (sym_residual <= skew_residual) {
        if (sym_residual > tols.sym_tol * nrm) {
            throw FormKindError(
                "validate_form: matrix is neither symmetric nor skew-symmetric "
                "within tolerance");
        }
        form.kind_ = FormKind::symmetric;
        form.s_ = 0.5 * (s + s.transpose());
        form.sym_ = eigh_symmetric(form.s_, tols);
        const double lo = form.sym_.lambda.cwiseAbs().minCoeff();
        const double hi = form.sym_.lambda.cwiseAbs().maxCoeff();
        if (!(hi > 0.0) || lo <= tols.inv_tol * hi) {
            throw SingularInputError("validate_form: symmetric form is numerically singular");
        }
        form.min_singular_ = lo;
    } else {
        if (skew_residual > tols.sym_tol * nrm) {
            throw FormKindError(
                "validate_form: matrix is neither symmetric nor skew-symmetric "
                "within tolerance");
        }
        form.kind_ = FormKind::skew;
        form.s_ = 0.5 * (s - s.transpose());
        // Throws InvalidDimensionError for odd sizes and SingularInputError for
        // singular forms; the min block value doubles as the singular estimate.
        form.skew_ = skew_canonical(form.s_, tols);
        form.min_singular_ = form.skew_.lambda.minCoeff();
    }
    return form;
}

BilinearForm symplectic_form(Index n, const Tolerances& tols) {
    if (n < 1) {
        throw InvalidDimensionError("symplectic_form: n must be at least 1");
    }
    RealMatrix s = RealMatrix::Zero(2 * n, 2 * n);
    for (Index i = 0; i < n; ++i) {
        s(i, n + i) = 1.0;
        s(n + i, i) = -1.0;
    }
    return validate_form(s, tols);
}

BilinearForm indefinite_form(Index p, Index q, const Tolerances& tols) {
    if (p < 0 || q < 0 || p + q < 1) {
        throw InvalidDimensionError("indefinite_form: signature (p, q) needs p + q >= 1");
    }
    const Index n = p + q;
    RealMatrix s = RealMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        s(i, i) = i < p ? 1.0 : -1.0;
    }
    return validate_form(s, tols);
}

}  // namespace formstab

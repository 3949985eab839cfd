#pragma once

#include <cmath>

#include "formstab/matrix.hpp"

namespace formstab {

/// Numerical policy knobs. Defaults are generous against double-precision
/// QR/eigensolver error bounds; the CLI can override any of them through
/// FORMSTAB_* environment variables (see from_env).
struct Tolerances {
    /// Relative (anti)symmetry threshold for form classification.
    double sym_tol = 1e-12;
    /// Relative invertibility threshold: min singular value must exceed
    /// inv_tol times the largest.
    double inv_tol = 1e-10;
    /// Eigenvalue clustering: cluster_tol = cluster_tol_scale * max(1, |lambda|_inf).
    double cluster_tol_scale = 1e-8;
    /// Generation residual budget: gen_tol(N) = gen_tol_scale * N.
    double gen_tol_scale = 1e-11;
    /// Determinant check: | |det| - 1 | <= det_tol_scale * N.
    double det_tol_scale = 1e-9;
    /// Orthogonality budget of factor outputs: tol_orth(N) = orth_tol_scale * N.
    double orth_tol_scale = 1e-13;
    /// Factorization residual budget: tol_fact(N) = fact_tol_scale * sqrt(N).
    double fact_tol_scale = 1e-12;

    double tol_orth(Index n) const { return orth_tol_scale * static_cast<double>(n); }
    double tol_fact(Index n) const { return fact_tol_scale * std::sqrt(static_cast<double>(n)); }
    double gen_tol(Index n) const { return gen_tol_scale * static_cast<double>(n); }
    double det_tol(Index n) const { return det_tol_scale * static_cast<double>(n); }

    double cluster_tol(const RealVector& lambda) const {
        const double peak = lambda.size() > 0 ? lambda.cwiseAbs().maxCoeff() : 0.0;
        return cluster_tol_scale * std::max(1.0, peak);
    }

    /// Defaults overridden by FORMSTAB_SYM_TOL, FORMSTAB_INV_TOL,
    /// FORMSTAB_CLUSTER_TOL, FORMSTAB_GEN_TOL, FORMSTAB_DET_TOL,
    /// FORMSTAB_ORTH_TOL, FORMSTAB_FACT_TOL (each a floating-point literal).
    static Tolerances from_env();
};

}  // namespace formstab

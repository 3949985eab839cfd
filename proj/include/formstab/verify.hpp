#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "formstab/forms.hpp"
#include "formstab/matrix.hpp"
#include "formstab/tolerances.hpp"

namespace formstab {

/// Residual record attesting that A satisfies A^T S A = S and A^T A = I
/// within the stated tolerances.
struct Certificate {
    double residual_s = 0.0;     ///< ||A^T S A - S||_F / ||S||_F
    double residual_orth = 0.0;  ///< ||A^T A - I||_F
    double det_value = 0.0;
    bool passed = false;
    double tol_s = 0.0;
    double tol_orth = 0.0;
    double tol_det = 0.0;
    std::vector<std::string> warnings;
};

/// Computes both residuals and det(A). passed holds iff both residuals are
/// within tolerance and | |det| - 1 | <= tol_det. When tol is given it
/// overrides both residual tolerances; the default is gen_tol(N). A
/// "near-degenerate-spectrum" warning is attached when the form's eigenvalue
/// clusters sit closer than ten cluster tolerances.
Certificate certify(const RealMatrix& a, const BilinearForm& form,
                    std::optional<double> tol = std::nullopt,
                    const Tolerances& tols = {});

/// Flat JSON object with fields residual_s, residual_orth, det_value, passed,
/// warnings plus the tolerances used.
std::string certificate_to_json(const Certificate& c);

/// Entrywise summary over a batch of equally-shaped matrices. Plain arithmetic
/// means; thresholds are the caller's business.
struct MomentStats {
    std::size_t count = 0;
    RealMatrix mean;
    RealMatrix second_moment;
    std::size_t det_positive = 0;
    std::size_t det_negative = 0;
};

MomentStats moment_stats(const std::vector<RealMatrix>& samples);

std::string moment_stats_to_json(const MomentStats& stats);

/// Brute-force oracle for symmetric forms with an all-distinct spectrum: the
/// stabilizer is the finite group { U diag(+-1) U^T }, enumerated as all 2^N
/// sign patterns (bit j of the pattern index flips sign j). Throws
/// InvalidArgumentError when any cluster has multiplicity > 1 (the group is
/// infinite), for skew forms, or for N > 8.
std::vector<RealMatrix> enumerate_finite_stabilizer(const BilinearForm& form,
                                                    const Tolerances& tols = {});

}  // namespace formstab

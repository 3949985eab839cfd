#pragma once

#include <cstdint>
#include <vector>

#include "formstab/forms.hpp"
#include "formstab/matrix.hpp"
#include "formstab/rng.hpp"
#include "formstab/tolerances.hpp"

namespace formstab {

/// Grouping of an ascending eigenvalue list into numerically distinct values.
struct EigenClustering {
    /// Cluster representatives (means), ascending. Stored for diagnostics;
    /// the commutant structure depends only on the partition.
    std::vector<double> values;
    /// Cluster sizes k_1..k_M, each >= 1, summing to the input length.
    std::vector<std::size_t> multiplicities;
    /// Sends original index order to grouped order (identity for the sorted
    /// inputs produced by the factorizations).
    Permutation grouping;
    /// Smallest gap between the edges of adjacent clusters; +inf when there is
    /// a single cluster. Drives the near-degeneracy warning.
    double min_cluster_gap = 0.0;

    std::size_t cluster_count() const { return values.size(); }
    std::size_t total() const;
};

/// Greedy left-to-right grouping of an ascending list: a new cluster starts
/// whenever the gap to the previous element exceeds cluster_tol. Chained
/// merging (elements linked by sub-tolerance gaps spanning more than the
/// tolerance overall) is accepted behavior.
EigenClustering cluster_eigenvalues(const RealVector& lambda_ascending,
                                    double cluster_tol);

/// diag(B_1, ..., B_M) with B_i Haar orthogonal of size k_i, drawn from rng in
/// cluster order. Commutes with any diagonal matrix constant on the clusters.
RealMatrix sample_block_diagonal_orthogonal(const EigenClustering& clusters,
                                            RngStream& rng,
                                            const Tolerances& tols = {});

/// Unitary analog: diag(V_1, ..., V_M) with V_i Haar unitary of size k_i.
ComplexMatrix sample_block_diagonal_unitary(const EigenClustering& clusters,
                                            RngStream& rng,
                                            const Tolerances& tols = {});

/// Permutation on 2N indices sending 2j -> j and 2j+1 -> N+j (0-based), so
/// that conjugating a quasi-diagonal T with blocks [0, l_j; -l_j, 0] yields
/// exactly [[0, D], [-D, 0]] with D = diag(l_1..l_N).
Permutation interleave_permutation(std::size_t n_pairs);

/// The embedding u = A + iB |-> [[A, -B], [B, A]] of N x N complex matrices
/// into 2N x 2N real matrices. Pure re-layout; the only arithmetic is the
/// negation of the top-right block.
RealMatrix mu_embed(const ComplexMatrix& u);

/// A generated sample together with its residual certificate.
struct StabilizerSample {
    RealMatrix A;
    FormKind form_kind = FormKind::symmetric;
    std::uint64_t seed = 0;
    /// ||A^T S A - S||_F / ||S||_F
    double residual_s = 0.0;
    /// ||A^T A - I||_F
    double residual_orth = 0.0;
    /// Product of the sampled blocks' determinant signs (+1 always in the
    /// skew case, whose unitary image is connected).
    int det_sign = 1;
    /// Set when adjacent eigenvalue clusters are separated by less than ten
    /// cluster tolerances; the sample is still produced.
    bool near_degenerate = false;
};

/// Draws A = U B U^T with B block-diagonal orthogonal over the eigenvalue
/// clusters of the symmetric form S.
StabilizerSample generate_symmetric(const BilinearForm& form, RngStream& rng,
                                    const Tolerances& tols = {});

/// Skew case: A = U P^T mu(W* V W) P U^T with V block-diagonal unitary over
/// the clusters of the positive block values, P the interleave permutation,
/// and W the cluster grouping permutation (applied as an index relabeling).
StabilizerSample generate_skew(const BilinearForm& form, RngStream& rng,
                               const Tolerances& tols = {});

/// Dispatches on the validated form kind.
StabilizerSample generate(const BilinearForm& form, RngStream& rng,
                          const Tolerances& tols = {});

}  // namespace formstab

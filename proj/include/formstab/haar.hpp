#pragma once

#include "formstab/matrix.hpp"
#include "formstab/rng.hpp"
#include "formstab/tolerances.hpp"

namespace formstab {

/// Haar-distributed orthogonal matrix: sign-normalized QR of a Gaussian
/// matrix. If the Gaussian draw is numerically rank-deficient (a measure-zero
/// event) it is resampled once; a second failure propagates SingularInputError.
RealMatrix haar_orthogonal(Index n, RngStream& rng, const Tolerances& tols = {});

/// Haar-distributed unitary matrix, same construction over complex Gaussians.
ComplexMatrix haar_unitary(Index n, RngStream& rng, const Tolerances& tols = {});

}  // namespace formstab

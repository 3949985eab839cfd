#include "formstab/haar.hpp"

#include "formstab/factor.hpp"

namespace formstab {

namespace {

template <class Matrix, class Draw>
Matrix haar_impl(Index n, RngStream& rng, const Tolerances& tols, Draw draw) {
    // A rank-deficient Gaussian draw has measure zero; resample once, then fail.
    try {
        return qr_positive(draw(n, rng), tols).Q;
    } catch (const SingularInputError&) {
        return qr_positive(draw(n, rng), tols).Q;
    }
}

}  // namespace

RealMatrix haar_orthogonal(Index n, RngStream& rng, const Tolerances& tols) {
    return haar_impl<RealMatrix>(n, rng, tols,
                                 [](Index k, RngStream& r) { return gaussian_matrix(k, r); });
}

ComplexMatrix haar_unitary(Index n, RngStream& rng, const Tolerances& tols) {
    return haar_impl<ComplexMatrix>(
        n, rng, tols, [](Index k, RngStream& r) { return complex_gaussian_matrix(k, r); });
}

}  // namespace formstab

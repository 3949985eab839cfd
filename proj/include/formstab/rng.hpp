#pragma once

#include <cstdint>
#include <random>

#include "formstab/matrix.hpp"

namespace formstab {

/// splitmix64 finalizer; used to derive child stream seeds.
std::uint64_t mix_seed(std::uint64_t master_seed, std::uint64_t index);

/// Deterministic seeded random stream.
///
/// The raw 64-bit sequence comes from std::mt19937_64, which the C++ standard
/// specifies bit-exactly, so identical seeds give identical sequences on every
/// platform. Normal draws use the Box-Muller cosine branch only: exactly two
/// uniforms per normal, no cached twin, so the seed-to-draw mapping is a fixed
/// contract that never changes.
///
/// A stream is single-owner. Parallel generation splits the master stream via
/// child(i), never by sharing one stream across threads.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64();

    /// Uniform on the open interval (0, 1): ((x >> 11) + 0.5) * 2^-53.
    double next_uniform();

    /// Standard normal draw (Box-Muller, cosine branch).
    double next_normal();

    /// Independent substream i, seeded with mix_seed(seed(), i). Depends only
    /// on the parent's seed, not on how much of the parent has been consumed.
    RngStream child(std::uint64_t index) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// n x n matrix of i.i.d. standard normal draws, filled in row-major order and
/// consuming exactly n^2 draws from rng.
RealMatrix gaussian_matrix(Index n, RngStream& rng);

/// n x n complex matrix: all n^2 real-part draws first (row-major), then the
/// n^2 imaginary-part draws.
ComplexMatrix complex_gaussian_matrix(Index n, RngStream& rng);

}  // namespace formstab

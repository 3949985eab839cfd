#include "formstab/rng.hpp"

#include <cmath>

namespace formstab {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t splitmix64_finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t master_seed, std::uint64_t index) {
    return splitmix64_finalize(master_seed + (index + 1) * kGolden);
}

RngStream::RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t RngStream::next_u64() { return engine_(); }

double RngStream::next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::next_normal() {
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

RngStream RngStream::child(std::uint64_t index) const {
    return RngStream(mix_seed(seed_, index));
}

RealMatrix gaussian_matrix(Index n, RngStream& rng) {
    if (n < 1) {
        throw InvalidDimensionError("gaussian_matrix: size must be at least 1");
    }
    RealMatrix m(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            m(i, j) = rng.next_normal();
        }
    }
    return m;
}

ComplexMatrix complex_gaussian_matrix(Index n, RngStream& rng) {
    if (n < 1) {
        throw InvalidDimensionError("complex_gaussian_matrix: size must be at least 1");
    }
    const RealMatrix re = gaussian_matrix(n, rng);
    const RealMatrix im = gaussian_matrix(n, rng);
    ComplexMatrix m(n, n);
    m.real() = re;
    m.imag() = im;
    return m;
}

}  // namespace formstab

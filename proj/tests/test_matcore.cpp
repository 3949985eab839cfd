#include <doctest.h>

#include <cmath>
#include <cstring>

#include "formstab/matrix.hpp"
#include "formstab/rng.hpp"
#include "helpers.hpp"
#include "test_config.hpp"

using namespace formstab;

TEST_CASE("gaussian_matrix is deterministic per seed") {
    RngStream a(42);
    const RealMatrix m1 = gaussian_matrix(1, a);
    CHECK(std::isfinite(m1(0, 0)));

    RngStream b(42);
    const RealMatrix m2 = gaussian_matrix(1, b);
    CHECK(m1(0, 0) == m2(0, 0));

    RngStream c(99);
    RngStream d(99);
    CHECK(oracle::bit_identical(gaussian_matrix(2, c), gaussian_matrix(2, d)));
}

TEST_CASE("gaussian_matrix rejects size zero") {
    RngStream rng(1);
    CHECK_THROWS_AS(gaussian_matrix(0, rng), InvalidDimensionError);
    CHECK_THROWS_AS(complex_gaussian_matrix(0, rng), InvalidDimensionError);
}

TEST_CASE("gaussian draws have near-zero mean") {
    RngStream rng(cfg::kSeedGauss);
    double sum = 0.0;
    for (std::size_t i = 0; i < cfg::kMomentDraws; ++i) {
        sum += rng.next_normal();
    }
    const double mean = sum / static_cast<double>(cfg::kMomentDraws);
    CHECK(std::abs(mean) < 5.0 / std::sqrt(static_cast<double>(cfg::kMomentDraws)));
}

TEST_CASE("complex_gaussian_matrix draws real part first, row-major") {
    RngStream rng(cfg::kSeedComplex);
    const ComplexMatrix u = complex_gaussian_matrix(3, rng);

    RngStream replay(cfg::kSeedComplex);
    const RealMatrix re = gaussian_matrix(3, replay);
    const RealMatrix im = gaussian_matrix(3, replay);
    for (Index i = 0; i < 3; ++i) {
        for (Index j = 0; j < 3; ++j) {
            CHECK(u(i, j).real() == re(i, j));
            CHECK(u(i, j).imag() == im(i, j));
        }
    }
}

TEST_CASE("complex gaussian parts have near-zero mean") {
    RngStream rng(cfg::kSeedComplex + 1);
    const std::size_t reps = cfg::kMomentDraws / 64;
    double re_sum = 0.0;
    double im_sum = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
        const ComplexMatrix u = complex_gaussian_matrix(8, rng);
        re_sum += u.real().sum();
        im_sum += u.imag().sum();
    }
    const double n = static_cast<double>(reps) * 64.0;
    CHECK(std::abs(re_sum / n) < 5.0 / std::sqrt(n));
    CHECK(std::abs(im_sum / n) < 5.0 / std::sqrt(n));
}

TEST_CASE("child streams are reproducible and distinct") {
    const RngStream master(7);
    RngStream c0 = master.child(0);
    RngStream c0_again = master.child(0);
    RngStream c1 = master.child(1);
    const std::uint64_t v0 = c0.next_u64();
    CHECK(v0 == c0_again.next_u64());
    CHECK(v0 != c1.next_u64());
    CHECK(mix_seed(7, 0) == c0.seed());
}

TEST_CASE("permutation validates bijections") {
    CHECK_THROWS_AS(Permutation({0, 0}), InvalidArgumentError);
    CHECK_THROWS_AS(Permutation({0, 2}), InvalidArgumentError);
    CHECK_THROWS_AS(Permutation({}), InvalidArgumentError);
    const Permutation p({2, 0, 1});
    CHECK(p.inverse().image() == std::vector<std::size_t>({1, 2, 0}));
    CHECK(Permutation::identity(3).is_identity());
}

TEST_CASE("permutation_to_matrix basics") {
    const RealMatrix id3 = permutation_to_matrix(Permutation::identity(3));
    CHECK(oracle::bit_identical(id3, RealMatrix(RealMatrix::Identity(3, 3))));

    const RealMatrix swap01 = permutation_to_matrix(Permutation({1, 0}));
    RealMatrix expect(2, 2);
    expect << 0, 1, 1, 0;
    CHECK(oracle::bit_identical(swap01, expect));
}

TEST_CASE("permutation matrices are exactly orthogonal") {
    RngStream rng(cfg::kSeedGauss + 5);
    for (int rep = 0; rep < 20; ++rep) {
        // Random permutation via Fisher-Yates on the raw stream.
        std::vector<std::size_t> image(6);
        for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
        for (std::size_t i = image.size(); i > 1; --i) {
            std::swap(image[i - 1], image[rng.next_u64() % i]);
        }
        const Permutation p(image);
        const RealMatrix m = permutation_to_matrix(p);
        CHECK(oracle::orthogonality_residual(m) == 0.0);
    }
}

TEST_CASE("conjugate_by_permutation examples") {
    const Permutation id2 = Permutation::identity(2);
    RealMatrix m(2, 2);
    m << 0.1, -3.7, 2.5, 11.0;
    CHECK(oracle::bit_identical(conjugate_by_permutation(id2, m), m));

    RealMatrix d(2, 2);
    d << 4.0, 0.0, 0.0, 9.0;
    const RealMatrix swapped = conjugate_by_permutation(Permutation({1, 0}), d);
    RealMatrix expect(2, 2);
    expect << 9, 0, 0, 4;
    CHECK(oracle::bit_identical(swapped, expect));
}

TEST_CASE("conjugating quasi-diagonal blocks by the interleave map") {
    // Two blocks [0, l; -l, 0], indices relabeled by 0->0, 1->2, 2->1, 3->3.
    const double l1 = 2.5;
    const double l2 = 7.25;
    RealMatrix t = RealMatrix::Zero(4, 4);
    t(0, 1) = l1;
    t(1, 0) = -l1;
    t(2, 3) = l2;
    t(3, 2) = -l2;

    const Permutation p({0, 2, 1, 3});
    const RealMatrix j = conjugate_by_permutation(p, t);

    RealMatrix expect(4, 4);
    expect << 0, 0, l1, 0,
              0, 0, 0, l2,
              -l1, 0, 0, 0,
              0, -l2, 0, 0;
    CHECK(oracle::bit_identical(j, expect));
}

TEST_CASE("conjugation round-trips bit-exactly and matches the matrix product") {
    RngStream rng(cfg::kSeedGauss + 6);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<std::size_t> image(5);
        for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
        for (std::size_t i = image.size(); i > 1; --i) {
            std::swap(image[i - 1], image[rng.next_u64() % i]);
        }
        const Permutation p(image);
        const RealMatrix m = gaussian_matrix(5, rng);

        const RealMatrix back =
            conjugate_by_permutation(p, conjugate_by_permutation(p.inverse(), m));
        CHECK(oracle::bit_identical(back, m));

        const RealMatrix pm = permutation_to_matrix(p);
        const RealMatrix via_product =
            oracle::matmul(oracle::matmul(pm, m), oracle::conj_transpose(pm));
        CHECK(oracle::frob_diff(via_product, conjugate_by_permutation(p, m)) <=
              1e-15 * oracle::frob(m));

        // Integer entries survive the matrix-product route with zero rounding,
        // so both routes must agree to the bit.
        RealMatrix ints(5, 5);
        for (Index i = 0; i < 5; ++i) {
            for (Index j = 0; j < 5; ++j) {
                ints(i, j) = static_cast<double>(static_cast<int>(rng.next_u64() % 19) - 9);
            }
        }
        const RealMatrix ints_product =
            oracle::matmul(oracle::matmul(pm, ints), oracle::conj_transpose(pm));
        CHECK(oracle::exactly_equal(ints_product, conjugate_by_permutation(p, ints)));
    }
}

TEST_CASE("conjugate_by_permutation rejects shape mismatch") {
    RngStream rng(3);
    const RealMatrix m = gaussian_matrix(3, rng);
    CHECK_THROWS_AS(conjugate_by_permutation(Permutation::identity(2), m),
                    InvalidDimensionError);
}

TEST_CASE("determinant via LU") {
    RealMatrix m(2, 2);
    m << 3, 1, 4, 2;
    CHECK(determinant(m) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(determinant(RealMatrix::Identity(4, 4)) == doctest::Approx(1.0));
}

TEST_CASE("ensure_finite flags NaN") {
    RealMatrix m = RealMatrix::Zero(2, 2);
    m(1, 1) = std::nan("");
    CHECK_THROWS_AS(ensure_finite(m, "test"), InvalidArgumentError);
}

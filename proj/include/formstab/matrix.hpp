#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

#include "formstab/errors.hpp"

namespace formstab {

using Index = Eigen::Index;

// Dense, row-major, double precision throughout. Forms in scope are
// small-to-moderate (N up to a couple thousand), so no sparse path.
using RealMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic,
                                    Eigen::Dynamic, Eigen::RowMajor>;
using RealVector = Eigen::VectorXd;

/// Throws InvalidArgumentError if any entry is NaN or infinite.
void ensure_finite(const RealMatrix& m, const char* what);
void ensure_finite(const ComplexMatrix& m, const char* what);

/// Throws InvalidDimensionError unless m is square with at least one row.
void ensure_square(const RealMatrix& m, const char* what);
void ensure_square(const ComplexMatrix& m, const char* what);

/// A bijection on {0..size-1}. image(i) is the destination of source index i.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> image);

    static Permutation identity(std::size_t size);

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_[i]; }
    const std::vector<std::size_t>& image() const { return image_; }

    Permutation inverse() const;
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> image_;
};

/// The orthogonal matrix M with M[p(j), j] = 1, so M * e_j = e_{p(j)}.
/// Entries are exactly 0 or 1.
RealMatrix permutation_to_matrix(const Permutation& p);

/// P M P^T computed by index relabeling: result[p(i), p(j)] = M[i, j].
/// No floating-point arithmetic, so the conjugation is bit-exact.
RealMatrix conjugate_by_permutation(const Permutation& p, const RealMatrix& m);
ComplexMatrix conjugate_by_permutation(const Permutation& p,
                                       const ComplexMatrix& m);

/// det(M) via LU with partial pivoting.
double determinant(const RealMatrix& m);

}  // namespace formstab

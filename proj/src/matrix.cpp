#include "formstab/matrix.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace formstab {

namespace {

template <class Matrix>
void ensure_finite_impl(const Matrix& m, const char* what) {
    if (!m.allFinite()) {
        throw InvalidArgumentError(std::string(what) +
                                   ": matrix has NaN or infinite entries");
    }
}

template <class Matrix>
void ensure_square_impl(const Matrix& m, const char* what) {
    if (m.rows() < 1 || m.cols() < 1) {
        throw InvalidDimensionError(std::string(what) +
                                    ": matrix must be at least 1x1");
    }
    if (m.rows() != m.cols()) {
        throw InvalidDimensionError(std::string(what) + ": matrix must be square (" +
                                    std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()) + ")");
    }
}

template <class Matrix>
Matrix conjugate_impl(const Permutation& p, const Matrix& m) {
    ensure_square_impl(m, "conjugate_by_permutation");
    const auto n = static_cast<std::size_t>(m.rows());
    if (p.size() != n) {
        throw InvalidDimensionError(
            "conjugate_by_permutation: permutation size " + std::to_string(p.size()) +
            " does not match matrix size " + std::to_string(n));
    }
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(static_cast<Index>(p(i)), static_cast<Index>(p(j))) =
                m(static_cast<Index>(i), static_cast<Index>(j));
        }
    }
    return out;
}

}  // namespace

void ensure_finite(const RealMatrix& m, const char* what) { ensure_finite_impl(m, what); }
void ensure_finite(const ComplexMatrix& m, const char* what) { ensure_finite_impl(m, what); }
void ensure_square(const RealMatrix& m, const char* what) { ensure_square_impl(m, what); }
void ensure_square(const ComplexMatrix& m, const char* what) { ensure_square_impl(m, what); }

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    if (image_.empty()) {
        throw InvalidArgumentError("Permutation: image must be non-empty");
    }
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t v : image_) {
        if (v >= image_.size() || seen[v]) {
            throw InvalidArgumentError("Permutation: image is not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t size) {
    std::vector<std::size_t> image(size);
    std::iota(image.begin(), image.end(), std::size_t{0});
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) {
        inv[image_[i]] = i;
    }
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (image_[i] != i) return false;
    }
    return true;
}

RealMatrix permutation_to_matrix(const Permutation& p) {
    const auto n = static_cast<Index>(p.size());
    RealMatrix m = RealMatrix::Zero(n, n);
    for (std::size_t j = 0; j < p.size(); ++j) {
        m(static_cast<Index>(p(j)), static_cast<Index>(j)) = 1.0;
    }
    return m;
}

RealMatrix conjugate_by_permutation(const Permutation& p, const RealMatrix& m) {
    return conjugate_impl(p, m);
}

ComplexMatrix conjugate_by_permutation(const Permutation& p, const ComplexMatrix& m) {
    return conjugate_impl(p, m);
}

double determinant(const RealMatrix& m) {
    ensure_square(m, "determinant");
    Eigen::PartialPivLU<RealMatrix> lu(m);
    return lu.determinant();
}

}  // namespace formstab

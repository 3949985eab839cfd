#pragma once

// Independent oracles for the test suites: naive loop-based linear algebra,
// deliberately not routed through the library (or Eigen) so reconstruction
// and residual checks do not share code with what they verify.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "formstab/matrix.hpp"

namespace oracle {

using formstab::ComplexMatrix;
using formstab::Index;
using formstab::RealMatrix;

template <class Matrix>
Matrix matmul(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < b.cols(); ++j) {
            typename Matrix::Scalar sum{};
            for (Index k = 0; k < a.cols(); ++k) {
                sum += a(i, k) * b(k, j);
            }
            c(i, j) = sum;
        }
    }
    return c;
}

template <class Matrix>
Matrix conj_transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            if constexpr (std::is_same_v<typename Matrix::Scalar, double>) {
                t(j, i) = a(i, j);
            } else {
                t(j, i) = std::conj(a(i, j));
            }
        }
    }
    return t;
}

template <class Matrix>
double frob(const Matrix& a) {
    double sum = 0.0;
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            sum += std::norm(std::complex<double>(a(i, j)));
        }
    }
    return std::sqrt(sum);
}

template <class Matrix>
double frob_diff(const Matrix& a, const Matrix& b) {
    double sum = 0.0;
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            sum += std::norm(std::complex<double>(a(i, j)) - std::complex<double>(b(i, j)));
        }
    }
    return std::sqrt(sum);
}

template <class Matrix>
double max_abs_diff(const Matrix& a, const Matrix& b) {
    double worst = 0.0;
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            worst = std::max(worst, std::abs(std::complex<double>(a(i, j)) -
                                             std::complex<double>(b(i, j))));
        }
    }
    return worst;
}

/// Entrywise equality as real numbers (so -0.0 == +0.0), no tolerance.
template <class Matrix>
bool exactly_equal(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            if (a(i, j) != b(i, j)) return false;
        }
    }
    return true;
}

template <class Matrix>
bool bit_identical(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return std::memcmp(a.data(), b.data(),
                       sizeof(typename Matrix::Scalar) *
                           static_cast<std::size_t>(a.size())) == 0;
}

/// ||A^T S A - S||_F / ||S||_F, all products by naive loops.
inline double stabilizer_residual(const RealMatrix& a, const RealMatrix& s) {
    const RealMatrix lhs = matmul(matmul(conj_transpose(a), s), a);
    return frob_diff(lhs, s) / frob(s);
}

/// ||A^T A - I||_F by naive loops.
template <class Matrix>
double orthogonality_residual(const Matrix& a) {
    const Matrix prod = matmul(conj_transpose(a), a);
    double sum = 0.0;
    for (Index i = 0; i < prod.rows(); ++i) {
        for (Index j = 0; j < prod.cols(); ++j) {
            const std::complex<double> expect = i == j ? 1.0 : 0.0;
            sum += std::norm(std::complex<double>(prod(i, j)) - expect);
        }
    }
    return std::sqrt(sum);
}

/// Two-sided Kolmogorov-Smirnov statistic against U(0, 1).
inline double ks_statistic(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const auto n = static_cast<double>(values.size());
    double d = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double hi = (static_cast<double>(i) + 1.0) / n - values[i];
        const double lo = values[i] - static_cast<double>(i) / n;
        d = std::max({d, hi, lo});
    }
    return d;
}

/// Pearson chi-square statistic for equiprobable cells.
inline double chi_square_uniform(const std::vector<std::size_t>& counts,
                                 std::size_t total) {
    const double expected =
        static_cast<double>(total) / static_cast<double>(counts.size());
    double stat = 0.0;
    for (std::size_t c : counts) {
        const double diff = static_cast<double>(c) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

/// Rotation matrix [[cos t, -sin t], [sin t, cos t]].
inline RealMatrix rotation2(double theta) {
    RealMatrix r(2, 2);
    r(0, 0) = std::cos(theta);
    r(0, 1) = -std::sin(theta);
    r(1, 0) = std::sin(theta);
    r(1, 1) = std::cos(theta);
    return r;
}

}  // namespace oracle

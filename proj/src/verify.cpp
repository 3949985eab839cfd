#include "formstab/verify.hpp"

#include <cmath>
#include <json.hpp>

#include "formstab/stabilizer.hpp"

namespace formstab {

Certificate certify(const RealMatrix& a, const BilinearForm& form,
                    std::optional<double> tol, const Tolerances& tols) {
    ensure_square(a, "certify");
    ensure_finite(a, "certify");
    if (a.rows() != form.size()) {
        throw InvalidDimensionError("certify: matrix size " + std::to_string(a.rows()) +
                                    " does not match form size " +
                                    std::to_string(form.size()));
    }
    const Index n = a.rows();
    const RealMatrix& s = form.matrix();

    Certificate cert;
    cert.residual_s = (a.transpose() * s * a - s).norm() / s.norm();
    cert.residual_orth = (a.transpose() * a - RealMatrix::Identity(n, n)).norm();
    cert.det_value = determinant(a);
    cert.tol_s = tol.value_or(tols.gen_tol(n));
    cert.tol_orth = tol.value_or(tols.gen_tol(n));
    cert.tol_det = tols.det_tol(n);
    cert.passed = cert.residual_s <= cert.tol_s && cert.residual_orth <= cert.tol_orth &&
                  std::abs(std::abs(cert.det_value) - 1.0) <= cert.tol_det;

    // Near-degeneracy is a property of the form's spectrum, not of A: whether
    // two clusters "are" the same eigenvalue is the caller's call, so it is
    // surfaced as a warning rather than a failure.
    const double ctol = tols.cluster_tol(form.spectrum());
    const EigenClustering clusters = cluster_eigenvalues(form.spectrum(), ctol);
    if (clusters.min_cluster_gap < 10.0 * ctol) {
        cert.warnings.emplace_back("near-degenerate-spectrum");
    }
    return cert;
}

std::string certificate_to_json(const Certificate& c) {
    nlohmann::json j;
    j["residual_s"] = c.residual_s;
    j["residual_orth"] = c.residual_orth;
    j["det_value"] = c.det_value;
    j["passed"] = c.passed;
    j["tol_s"] = c.tol_s;
    j["tol_orth"] = c.tol_orth;
    j["tol_det"] = c.tol_det;
    j["warnings"] = c.warnings;
    return j.dump();
}

MomentStats moment_stats(const std::vector<RealMatrix>& samples) {
    if (samples.empty()) {
        throw InvalidArgumentError("moment_stats: sample list is empty");
    }
    const Index rows = samples.front().rows();
    const Index cols = samples.front().cols();

    MomentStats stats;
    stats.count = samples.size();
    stats.mean = RealMatrix::Zero(rows, cols);
    stats.second_moment = RealMatrix::Zero(rows, cols);
    for (const RealMatrix& m : samples) {
        if (m.rows() != rows || m.cols() != cols) {
            throw InvalidArgumentError("moment_stats: samples must share one shape");
        }
        stats.mean += m;
        stats.second_moment += m.cwiseProduct(m);
        if (m.rows() == m.cols()) {
            (determinant(m) < 0.0 ? stats.det_negative : stats.det_positive) += 1;
        }
    }
    const double inv = 1.0 / static_cast<double>(stats.count);
    stats.mean *= inv;
    stats.second_moment *= inv;
    return stats;
}

namespace {

nlohmann::json matrix_to_json_rows(const RealMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string moment_stats_to_json(const MomentStats& stats) {
    nlohmann::json j;
    j["count"] = stats.count;
    j["rows"] = stats.mean.rows();
    j["cols"] = stats.mean.cols();
    j["mean"] = matrix_to_json_rows(stats.mean);
    j["second_moment"] = matrix_to_json_rows(stats.second_moment);
    j["det_sign_frequency"] = {
        {"plus", stats.det_positive},
        {"minus", stats.det_negative},
    };
    return j.dump();
}

std::vector<RealMatrix> enumerate_finite_stabilizer(const BilinearForm& form,
                                                    const Tolerances& tols) {
    if (form.kind() != FormKind::symmetric) {
        throw InvalidArgumentError(
            "enumerate_finite_stabilizer: only symmetric forms have the finite "
            "all-distinct structure");
    }
    const Index n = form.size();
    if (n > 8) {
        throw InvalidArgumentError("enumerate_finite_stabilizer: limited to size 8");
    }
    const SymmetricFactorization& fact = form.symmetric_factorization();
    const EigenClustering clusters =
        cluster_eigenvalues(fact.lambda, tols.cluster_tol(fact.lambda));
    for (std::size_t k : clusters.multiplicities) {
        if (k > 1) {
            throw InvalidArgumentError(
                "enumerate_finite_stabilizer: repeated eigenvalue makes the group "
                "infinite");
        }
    }

    std::vector<RealMatrix> group;
    group.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        RealVector signs(n);
        for (Index j = 0; j < n; ++j) {
            signs(j) = (mask >> j) & 1 ? -1.0 : 1.0;
        }
        group.push_back(fact.U * signs.asDiagonal() * fact.U.transpose());
    }
    return group;
}

}  // namespace formstab

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "formstab/haar.hpp"
#include "formstab/io.hpp"
#include "formstab/stabilizer.hpp"
#include "formstab/verify.hpp"

namespace py = pybind11;
using namespace formstab;

namespace {

std::vector<StabilizerSample> generate_batch(const BilinearForm& form,
                                             std::uint64_t seed, std::size_t count,
                                             const Tolerances& tols) {
    if (count < 1) {
        throw InvalidArgumentError("generate_batch: count must be at least 1");
    }
    const RngStream master(seed);
    std::vector<StabilizerSample> samples;
    samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        RngStream stream = master.child(i);
        samples.push_back(generate(form, stream, tols));
    }
    return samples;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Random orthogonal matrices preserving a symmetric or "
              "skew-symmetric bilinear form";

    py::register_exception<InvalidDimensionError>(m, "InvalidDimensionError",
                                                  PyExc_ValueError);
    py::register_exception<SingularInputError>(m, "SingularInputError",
                                               PyExc_ValueError);
    py::register_exception<FormKindError>(m, "FormKindError", PyExc_ValueError);
    py::register_exception<InvalidArgumentError>(m, "InvalidArgumentError",
                                                 PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::enum_<FormKind>(m, "FormKind")
        .value("symmetric", FormKind::symmetric)
        .value("skew", FormKind::skew);

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init<>())
        .def_readwrite("sym_tol", &Tolerances::sym_tol)
        .def_readwrite("inv_tol", &Tolerances::inv_tol)
        .def_readwrite("cluster_tol_scale", &Tolerances::cluster_tol_scale)
        .def_readwrite("gen_tol_scale", &Tolerances::gen_tol_scale)
        .def_readwrite("det_tol_scale", &Tolerances::det_tol_scale)
        .def_readwrite("orth_tol_scale", &Tolerances::orth_tol_scale)
        .def_readwrite("fact_tol_scale", &Tolerances::fact_tol_scale)
        .def("gen_tol", &Tolerances::gen_tol, py::arg("n"));

    py::class_<RngStream>(m, "RngStream")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def_property_readonly("seed", &RngStream::seed)
        .def("next_u64", &RngStream::next_u64)
        .def("next_uniform", &RngStream::next_uniform)
        .def("next_normal", &RngStream::next_normal)
        .def("child", &RngStream::child, py::arg("index"));

    m.def("mix_seed", &mix_seed, py::arg("master_seed"), py::arg("index"));

    m.def("gaussian_matrix", &gaussian_matrix, py::arg("n"), py::arg("rng"));
    m.def("complex_gaussian_matrix", &complex_gaussian_matrix, py::arg("n"),
          py::arg("rng"));

    m.def(
        "qr_positive",
        [](const RealMatrix& a, const Tolerances& tols) {
            auto [q, r] = qr_positive(a, tols);
            return py::make_tuple(std::move(q), std::move(r));
        },
        py::arg("matrix"), py::arg("tolerances") = Tolerances{},
        "Sign-normalized QR: returns (Q, R) with diag(R) real positive");
    m.def(
        "qr_positive",
        [](const ComplexMatrix& a, const Tolerances& tols) {
            auto [q, r] = qr_positive(a, tols);
            return py::make_tuple(std::move(q), std::move(r));
        },
        py::arg("matrix"), py::arg("tolerances") = Tolerances{});

    m.def(
        "eigh_symmetric",
        [](const RealMatrix& s, const Tolerances& tols) {
            auto fact = eigh_symmetric(s, tols);
            return py::make_tuple(std::move(fact.U), std::move(fact.lambda));
        },
        py::arg("matrix"), py::arg("tolerances") = Tolerances{},
        "Returns (U, lambda) with S = U diag(lambda) U^T, lambda ascending");

    m.def(
        "skew_canonical",
        [](const RealMatrix& s, const Tolerances& tols) {
            auto fact = skew_canonical(s, tols);
            return py::make_tuple(std::move(fact.U), std::move(fact.lambda));
        },
        py::arg("matrix"), py::arg("tolerances") = Tolerances{},
        "Returns (U, lambda) with S = U T U^T, T quasi-diagonal with blocks "
        "[0, l; -l, 0]");

    m.def("haar_orthogonal", &haar_orthogonal, py::arg("n"), py::arg("rng"),
          py::arg("tolerances") = Tolerances{});
    m.def("haar_unitary", &haar_unitary, py::arg("n"), py::arg("rng"),
          py::arg("tolerances") = Tolerances{});

    py::class_<BilinearForm>(m, "BilinearForm")
        .def_property_readonly("matrix", &BilinearForm::matrix)
        .def_property_readonly("kind", &BilinearForm::kind)
        .def_property_readonly("size", &BilinearForm::size)
        .def_property_readonly("min_singular_estimate",
                               &BilinearForm::min_singular_estimate)
        .def_property_readonly("spectrum", &BilinearForm::spectrum);

    m.def("validate_form", &validate_form, py::arg("matrix"),
          py::arg("tolerances") = Tolerances{});
    m.def("symplectic_form", &symplectic_form, py::arg("n"),
          py::arg("tolerances") = Tolerances{});
    m.def("indefinite_form", &indefinite_form, py::arg("p"), py::arg("q"),
          py::arg("tolerances") = Tolerances{});

    py::class_<EigenClustering>(m, "EigenClustering")
        .def_readonly("values", &EigenClustering::values)
        .def_readonly("multiplicities", &EigenClustering::multiplicities)
        .def_readonly("min_cluster_gap", &EigenClustering::min_cluster_gap)
        .def_property_readonly(
            "grouping",
            [](const EigenClustering& c) { return c.grouping.image(); });

    m.def("cluster_eigenvalues", &cluster_eigenvalues, py::arg("lambda_ascending"),
          py::arg("cluster_tol"));
    m.def("sample_block_diagonal_orthogonal", &sample_block_diagonal_orthogonal,
          py::arg("clusters"), py::arg("rng"), py::arg("tolerances") = Tolerances{});
    m.def("sample_block_diagonal_unitary", &sample_block_diagonal_unitary,
          py::arg("clusters"), py::arg("rng"), py::arg("tolerances") = Tolerances{});
    m.def(
        "interleave_permutation",
        [](std::size_t n_pairs) { return interleave_permutation(n_pairs).image(); },
        py::arg("n_pairs"));
    m.def("mu_embed", &mu_embed, py::arg("u"));

    py::class_<StabilizerSample>(m, "StabilizerSample")
        .def_readonly("A", &StabilizerSample::A)
        .def_readonly("form_kind", &StabilizerSample::form_kind)
        .def_readonly("seed", &StabilizerSample::seed)
        .def_readonly("residual_s", &StabilizerSample::residual_s)
        .def_readonly("residual_orth", &StabilizerSample::residual_orth)
        .def_readonly("det_sign", &StabilizerSample::det_sign)
        .def_readonly("near_degenerate", &StabilizerSample::near_degenerate);

    m.def("generate", &generate, py::arg("form"), py::arg("rng"),
          py::arg("tolerances") = Tolerances{});
    m.def(
        "generate",
        [](const BilinearForm& form, std::uint64_t seed, const Tolerances& tols) {
            RngStream rng(seed);
            return generate(form, rng, tols);
        },
        py::arg("form"), py::arg("seed"), py::arg("tolerances") = Tolerances{});
    m.def("generate_batch", &generate_batch, py::arg("form"), py::arg("seed"),
          py::arg("count"), py::arg("tolerances") = Tolerances{},
          "Sample i uses child stream i of the master seed, matching the CLI");

    py::class_<Certificate>(m, "Certificate")
        .def_readonly("residual_s", &Certificate::residual_s)
        .def_readonly("residual_orth", &Certificate::residual_orth)
        .def_readonly("det_value", &Certificate::det_value)
        .def_readonly("passed", &Certificate::passed)
        .def_readonly("tol_s", &Certificate::tol_s)
        .def_readonly("tol_orth", &Certificate::tol_orth)
        .def_readonly("tol_det", &Certificate::tol_det)
        .def_readonly("warnings", &Certificate::warnings)
        .def("to_json", &certificate_to_json);

    m.def("certify", &certify, py::arg("a"), py::arg("form"),
          py::arg("tol") = std::nullopt, py::arg("tolerances") = Tolerances{});

    py::class_<MomentStats>(m, "MomentStats")
        .def_readonly("count", &MomentStats::count)
        .def_readonly("mean", &MomentStats::mean)
        .def_readonly("second_moment", &MomentStats::second_moment)
        .def_readonly("det_positive", &MomentStats::det_positive)
        .def_readonly("det_negative", &MomentStats::det_negative)
        .def("to_json", &moment_stats_to_json);

    m.def("moment_stats", &moment_stats, py::arg("samples"));
    m.def("enumerate_finite_stabilizer", &enumerate_finite_stabilizer,
          py::arg("form"), py::arg("tolerances") = Tolerances{});

    m.def("read_matrix_file",
          py::overload_cast<const std::string&>(&read_matrix_file), py::arg("path"));
    m.def(
        "write_matrix_file",
        [](const std::string& path, const RealMatrix& a) {
            write_matrix_file(path, a, format_from_path(path));
        },
        py::arg("path"), py::arg("matrix"));

    m.attr("__version__") = "0.1.0";
}

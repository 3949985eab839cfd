"""Random orthogonal matrices preserving a bilinear form.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its public surface.
"""

from ._core import (
    BilinearForm,
    Certificate,
    EigenClustering,
    FormKind,
    FormKindError,
    InvalidArgumentError,
    InvalidDimensionError,
    IoError,
    MomentStats,
    RngStream,
    SingularInputError,
    StabilizerSample,
    Tolerances,
    certify,
    cluster_eigenvalues,
    complex_gaussian_matrix,
    enumerate_finite_stabilizer,
    gaussian_matrix,
    generate,
    generate_batch,
    eigh_symmetric,
    haar_orthogonal,
    haar_unitary,
    indefinite_form,
    interleave_permutation,
    mix_seed,
    moment_stats,
    mu_embed,
    qr_positive,
    read_matrix_file,
    sample_block_diagonal_orthogonal,
    sample_block_diagonal_unitary,
    skew_canonical,
    symplectic_form,
    validate_form,
    write_matrix_file,
    __version__,
)

__all__ = [
    "BilinearForm",
    "Certificate",
    "EigenClustering",
    "FormKind",
    "FormKindError",
    "InvalidArgumentError",
    "InvalidDimensionError",
    "IoError",
    "MomentStats",
    "RngStream",
    "SingularInputError",
    "StabilizerSample",
    "Tolerances",
    "certify",
    "cluster_eigenvalues",
    "complex_gaussian_matrix",
    "enumerate_finite_stabilizer",
    "gaussian_matrix",
    "generate",
    "generate_batch",
    "eigh_symmetric",
    "haar_orthogonal",
    "haar_unitary",
    "indefinite_form",
    "interleave_permutation",
    "mix_seed",
    "moment_stats",
    "mu_embed",
    "qr_positive",
    "read_matrix_file",
    "sample_block_diagonal_orthogonal",
    "sample_block_diagonal_unitary",
    "skew_canonical",
    "symplectic_form",
    "validate_form",
    "write_matrix_file",
    "__version__",
]

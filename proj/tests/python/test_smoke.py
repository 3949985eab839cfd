"""Smoke tests for the Python bindings.

Residual checks here are recomputed with numpy, independently of the
library's own certificate arithmetic.
"""

import numpy as np
import pytest

import formstab


def stabilizer_residual(a, s):
    return np.linalg.norm(a.T @ s @ a - s) / np.linalg.norm(s)


def orthogonality_residual(a):
    return np.linalg.norm(a.T @ a - np.eye(a.shape[0]))


def test_symplectic_generation():
    omega = formstab.symplectic_form(3)
    sample = formstab.generate(omega, seed=7)
    assert sample.form_kind == formstab.FormKind.skew
    assert stabilizer_residual(sample.A, omega.matrix) <= 1e-10
    assert orthogonality_residual(sample.A) <= 1e-10
    assert sample.det_sign == 1


def test_indefinite_generation_and_certificate():
    lorentz = formstab.indefinite_form(1, 3)
    sample = formstab.generate(lorentz, seed=1)
    assert stabilizer_residual(sample.A, lorentz.matrix) <= 1e-10
    cert = formstab.certify(sample.A, lorentz)
    assert cert.passed
    assert '"passed":true' in cert.to_json()


def test_generation_is_deterministic():
    form = formstab.symplectic_form(2)
    a1 = formstab.generate(form, seed=123).A
    a2 = formstab.generate(form, seed=123).A
    np.testing.assert_array_equal(a1, a2)


def test_batch_uses_child_streams():
    form = formstab.indefinite_form(2, 2)
    batch = formstab.generate_batch(form, seed=9, count=3)
    assert len(batch) == 3
    child0 = formstab.generate(form, seed=formstab.mix_seed(9, 0))
    np.testing.assert_array_equal(batch[0].A, child0.A)


def test_validate_form_roundtrip():
    rng = np.random.default_rng(5)
    g = rng.standard_normal((6, 6))
    form = formstab.validate_form(g + g.T)
    assert form.kind == formstab.FormKind.symmetric
    assert form.size == 6
    sample = formstab.generate(form, seed=11)
    assert stabilizer_residual(sample.A, form.matrix) <= 1e-10


def test_qr_positive_real_and_complex():
    rng = np.random.default_rng(2)
    m = rng.standard_normal((5, 5))
    q, r = formstab.qr_positive(m)
    assert np.linalg.norm(q @ r - m) <= 1e-12 * np.linalg.norm(m)
    assert np.all(np.diag(r) > 0)

    c = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    q, r = formstab.qr_positive(c)
    assert np.linalg.norm(q @ r - c) <= 1e-12 * np.linalg.norm(c)
    assert np.all(np.diag(r).imag == 0)
    assert np.all(np.diag(r).real > 0)


def test_skew_canonical_and_mu_embed():
    rng = np.random.default_rng(3)
    g = rng.standard_normal((6, 6))
    s = g - g.T
    u, lam = formstab.skew_canonical(s)
    assert np.all(lam > 0)
    assert np.all(np.diff(lam) >= 0)

    t = np.zeros((6, 6))
    for j, l in enumerate(lam):
        t[2 * j, 2 * j + 1] = l
        t[2 * j + 1, 2 * j] = -l
    assert np.linalg.norm(u @ t @ u.T - s) <= 1e-11 * np.linalg.norm(s)

    v = formstab.haar_unitary(3, formstab.RngStream(4))
    mu = formstab.mu_embed(v)
    assert mu.shape == (6, 6)
    assert orthogonality_residual(mu) <= 1e-12


def test_error_types():
    with pytest.raises(formstab.FormKindError):
        formstab.validate_form(np.array([[1.0, 2.0], [3.0, 4.0]]))
    with pytest.raises(formstab.SingularInputError):
        formstab.validate_form(np.diag([1.0, 0.0]))
    with pytest.raises(formstab.InvalidDimensionError):
        formstab.validate_form(np.array([[0.0, 1.0, 0.0],
                                         [-1.0, 0.0, 0.0],
                                         [0.0, 0.0, 0.0]]))


def test_matrix_file_roundtrip(tmp_path):
    rng = np.random.default_rng(8)
    m = rng.standard_normal((3, 4))
    for ext in (".mtx", ".csv", ".json"):
        path = str(tmp_path / f"m{ext}")
        formstab.write_matrix_file(path, m)
        np.testing.assert_array_equal(formstab.read_matrix_file(path), m)


def test_enumerate_finite_stabilizer():
    form = formstab.validate_form(np.diag([1.0, 2.0]))
    group = formstab.enumerate_finite_stabilizer(form)
    assert len(group) == 4
    sample = formstab.generate(form, seed=2)
    best = min(np.abs(sample.A - g).max() for g in group)
    assert best <= 1e-10

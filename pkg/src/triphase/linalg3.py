"""Small dense complex linear algebra helpers for 3x3 problems.

All matrices are numpy arrays of dtype complex128.  Shapes are not
restricted to 3x3 except where a routine says so; the package only ever
uses 2x2 and 3x3 blocks.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NotHermitianError, NotSkewHermitianError

HERMITIAN_TOL = 1e-12


def adjoint(m):
    """Conjugate transpose."""
    return np.conj(np.swapaxes(m, -1, -2))


def mat_mul(a, b):
    """Matrix product of two square complex matrices."""
    return np.asarray(a, dtype=complex) @ np.asarray(b, dtype=complex)


def max_abs(m):
    """Largest entry magnitude, used as the working matrix norm."""
    return float(np.max(np.abs(m))) if np.size(m) else 0.0


def is_unitary(m, tol=1e-10):
    """True when m @ m^dag is the identity within tol (max-entry norm)."""
    m = np.asarray(m, dtype=complex)
    return max_abs(m @ adjoint(m) - np.eye(m.shape[-1])) <= tol


def _require_hermitian(h, tol, exc):
    h = np.asarray(h, dtype=complex)
    err = max_abs(h - adjoint(h))
    if err > tol:
        raise exc(f"matrix deviates from Hermitian by {err:.3e} (tol {tol:.1e})")
    return h


@dataclass
class EigenSystem3:
    """Eigendecomposition of a Hermitian matrix.

    values: real eigenvalues in ascending order.
    vectors: matrix whose k-th column is the unit eigenvector for values[k],
        with the global phase fixed so the largest-magnitude component of
        each column is real and nonnegative.
    """

    values: np.ndarray
    vectors: np.ndarray


def eig_hermitian(h, tol=HERMITIAN_TOL):
    """Eigendecomposition of a Hermitian matrix with a fixed phase gauge.

    Raises NotHermitianError when the input is not Hermitian within tol.
    """
    h = _require_hermitian(h, tol, NotHermitianError)
    values, vectors = np.linalg.eigh(h)
    vectors = np.array(vectors, dtype=complex)
    for k in range(vectors.shape[1]):
        col = vectors[:, k]
        lead = int(np.argmax(np.abs(col)))
        phase = np.angle(col[lead])
        vectors[:, k] = col * np.exp(-1j * phase)
    return EigenSystem3(values=values, vectors=vectors)


def expm_skew_hermitian(m, tol=HERMITIAN_TOL):
    """exp(m) for skew-Hermitian m = i*H, via eigendecomposition of H.

    The result is exactly a unitary synthesized as V diag(e^{i e_k}) V^dag.
    Raises NotSkewHermitianError when i*m is not Hermitian within tol.
    """
    m = np.asarray(m, dtype=complex)
    h = _require_hermitian(-1j * m, tol, NotSkewHermitianError)
    values, vectors = np.linalg.eigh(h)
    return (vectors * np.exp(1j * values)) @ adjoint(vectors)


def expm_series(m, tol=HERMITIAN_TOL):
    """exp(m) for skew-Hermitian m by scaling and squaring a Taylor series.

    Independent of expm_skew_hermitian; the two must agree to 1e-12 and the
    test suite holds them to that.
    """
    m = np.asarray(m, dtype=complex)
    _require_hermitian(-1j * m, tol, NotSkewHermitianError)
    norm = max_abs(m)
    squarings = max(0, int(np.ceil(np.log2(norm / 0.25))) if norm > 0.25 else 0)
    small = m / (2**squarings)
    result = np.eye(m.shape[0], dtype=complex)
    term = np.eye(m.shape[0], dtype=complex)
    for k in range(1, 40):
        term = term @ small / k
        result = result + term
        if max_abs(term) < 1e-20:
            break
    for _ in range(squarings):
        result = result @ result
    return result

"""Pure qutrit states, their eight-component Bloch vectors and densities.

Coordinates (alpha, beta, gamma, theta) are the first four Euler angles;
chi is an overall phase on the state vector.  A unit vector n over the
traceless generators represents the density rho = (1 + sqrt(3) n.lam) / 3,
and rho is a pure state exactly when n is real, has unit norm and is
idempotent under the star product.
"""

import numpy as np

from .errors import NotUnitNormError
from .gellmann import SQRT3, compose, star


def bloch_vector(alpha, beta, gamma, theta):
    """Closed-form Bloch 8-vector of the pure state at the given angles.

    Equals -1 times row 8 of the adjoint representation of the coset
    representative, and satisfies n.n = 1 and star(n, n) = n.
    """
    s3h = SQRT3 / 2.0
    st2 = np.sin(theta) ** 2
    s2t = np.sin(2 * theta)
    return np.stack(
        [
            -s3h * np.cos(2 * alpha) * np.sin(2 * beta) * st2,
            s3h * np.sin(2 * alpha) * np.sin(2 * beta) * st2,
            s3h * np.cos(2 * beta) * st2,
            s3h * np.cos(alpha + gamma) * np.cos(beta) * s2t,
            -s3h * np.sin(alpha + gamma) * np.cos(beta) * s2t,
            -s3h * np.cos(alpha - gamma) * np.sin(beta) * s2t,
            -s3h * np.sin(alpha - gamma) * np.sin(beta) * s2t,
            -1.0 + 1.5 * st2,
        ],
        axis=-1,
    )


def pure_state(alpha, beta, gamma, theta, chi=0.0):
    """Unit state vector at the given coordinates.

    This is the third column of the coset representative times a global
    phase exp(i chi): note the minus sign carried by the second component,
    which the Bloch-vector closed form requires.
    """
    phase = np.exp(1j * chi)
    return phase * np.stack(
        [
            np.exp(1j * (alpha + gamma)) * np.cos(beta) * np.sin(theta),
            -np.exp(-1j * (alpha - gamma)) * np.sin(beta) * np.sin(theta),
            np.cos(theta) * np.ones_like(np.asarray(alpha, dtype=float)),
        ],
        axis=-1,
    )


def density_from_bloch(n, norm_tol=1e-10):
    """Density matrix (1 + sqrt(3) n.lam) / 3 for a unit coefficient vector.

    Unit norm is required; purity is not.  Vectors that are unit norm but
    not star-idempotent give Hermitian unit-trace matrices with a negative
    eigenvalue, which is_pure reports rather than this routine rejecting.
    """
    n = np.asarray(n, dtype=float)
    if n.shape != (8,):
        raise ValueError("Bloch vector must have shape (8,)")
    norm = float(np.linalg.norm(n))
    if abs(norm - 1.0) > norm_tol:
        raise NotUnitNormError(f"|n| = {norm} is not 1 within {norm_tol:.1e}")
    return compose(1.0 / 3.0, n / SQRT3)


def is_pure(n, tol=1e-9):
    """True when n has unit norm and reproduces itself under star."""
    n = np.asarray(n, dtype=float)
    if n.shape != (8,):
        raise ValueError("Bloch vector must have shape (8,)")
    unit = abs(float(n @ n) - 1.0) <= tol
    idem = float(np.max(np.abs(star(n, n) - n))) <= tol
    return bool(unit and idem)


def diagonal_density(theta_s, phi_s):
    """Diagonal density from two sphere-like angles.

    Entries (cos^2 t sin^2 p, sin^2 t sin^2 p, cos^2 p) written so they
    sum to exactly 1 in floating point.
    """
    sp2 = np.sin(phi_s) ** 2
    p1 = np.cos(theta_s) ** 2 * sp2
    p2 = sp2 - p1
    p3 = 1.0 - (p1 + p2)
    return np.diag([p1, p2, p3]).astype(complex)

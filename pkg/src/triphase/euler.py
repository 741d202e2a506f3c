"""Euler-angle construction of SU(3) group elements.

A group element is the eight-factor product

    u = exp(i l3 alpha) exp(i l2 beta) exp(i l3 gamma) exp(i l5 theta)
        exp(i l3 a) exp(i l2 b) exp(i l3 c) exp(i l8 phi)

with l2, l3, l5, l8 the Gell-Mann generators.  Only those four generators
appear, and each factor has a closed form, so no general matrix
exponential is needed.  The first four angles fix the coset that carries
a pure state; the last four act inside the stabilizer subgroup.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NotSpecialUnitaryError, UnsupportedGeneratorError
from .gellmann import GELL_MANN, SQRT3
from .linalg3 import adjoint, is_unitary


@dataclass(frozen=True)
class EulerAngles:
    """The eight angles of the factored SU(3) element, in radians."""

    alpha: float = 0.0
    beta: float = 0.0
    gamma: float = 0.0
    theta: float = 0.0
    a: float = 0.0
    b: float = 0.0
    c: float = 0.0
    phi: float = 0.0


def generator_exp(k, angle):
    """Closed-form exp(i * lam_k * angle) for k in {2, 3, 5, 8}.

    lam_3 and lam_8 are diagonal; lam_2 and lam_5 generate plane rotations
    in components (1,2) and (1,3).
    """
    c, s = np.cos(angle), np.sin(angle)
    if k == 2:
        return np.array([[c, s, 0], [-s, c, 0], [0, 0, 1]], dtype=complex)
    if k == 3:
        return np.diag([np.exp(1j * angle), np.exp(-1j * angle), 1.0]).astype(complex)
    if k == 5:
        return np.array([[c, 0, s], [0, 1, 0], [-s, 0, c]], dtype=complex)
    if k == 8:
        e = np.exp(1j * angle / SQRT3)
        return np.diag([e, e, np.exp(-2j * angle / SQRT3)]).astype(complex)
    raise UnsupportedGeneratorError(f"no closed-form factor for generator {k}")


def su3_from_euler(angles):
    """The eight-factor SU(3) product for the given EulerAngles."""
    factors = (
        generator_exp(3, angles.alpha),
        generator_exp(2, angles.beta),
        generator_exp(3, angles.gamma),
        generator_exp(5, angles.theta),
        generator_exp(3, angles.a),
        generator_exp(2, angles.b),
        generator_exp(3, angles.c),
        generator_exp(8, angles.phi),
    )
    out = factors[0]
    for f in factors[1:]:
        out = out @ f
    return out


def coset_representative(alpha, beta, gamma, theta):
    """SU(3) element with the four stabilizer angles set to zero."""
    return su3_from_euler(EulerAngles(alpha=alpha, beta=beta, gamma=gamma, theta=theta))


def _require_special_unitary(u, tol):
    u = np.asarray(u, dtype=complex)
    if not is_unitary(u, tol):
        raise NotSpecialUnitaryError("matrix is not unitary within tolerance")
    det = np.linalg.det(u)
    if abs(det - 1.0) > 10 * tol:
        raise NotSpecialUnitaryError(f"determinant {det} is not 1")
    return u


def adjoint_rep(u, tol=1e-10):
    """8x8 adjoint representation R of u: u lam_i u^dag = R_ij lam_j.

    Entries are R_ij = Tr(u lam_i u^dag lam_j) / 2.  R is real orthogonal
    with determinant +1.
    """
    u = _require_special_unitary(u, tol)
    ud = adjoint(u)
    rotated = np.einsum("ab,ibc,cd->iad", u, GELL_MANN[1:], ud)
    return 0.5 * np.einsum("iad,jda->ij", rotated, GELL_MANN[1:]).real


def coset_project(u, tol=1e-10):
    """Project a group element onto the pure-state density it carries.

    Conjugates the reference projector (1 - sqrt(3) lam_8) / 3 =
    diag(0, 0, 1) by u.  The result only depends on the coset of u with
    respect to the stabilizer of the reference state.
    """
    u = _require_special_unitary(u, tol)
    reference = np.diag([0.0, 0.0, 1.0]).astype(complex)
    return u @ reference @ adjoint(u)

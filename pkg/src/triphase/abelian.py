"""Abelian Berry connection, curvature and geometric phase of the pure state.

The pulled-back connection along a parameter path is

    A(t) = sin^2(theta) (cos(2 beta) dalpha/dt + dgamma/dt)

which equals -i <psi | dpsi/dt> for the unit state vector at constant chi.
Its exterior derivative has the four coordinate-plane coefficients coded in
berry_curvature, and the closed-loop line integral is the geometric phase.
Phases are reported unreduced; callers fold modulo 2*pi when they need to.
"""

from dataclasses import dataclass

import numpy as np

from .errors import PathTooShortError, StepOutOfRangeError, UnsupportedPlaneError
from .paths import COORD_NAMES, ParameterPath, from_keyframes
from .states import pure_state

FD_STEP = 1e-5


def berry_connection(angles, velocity):
    """Closed-form pulled-back connection value(s).

    angles and velocity are arrays of shape (..., 4) holding
    (alpha, beta, gamma, theta) and their t derivatives.
    """
    angles = np.asarray(angles, dtype=float)
    velocity = np.asarray(velocity, dtype=float)
    st2 = np.sin(angles[..., 3]) ** 2
    return st2 * (np.cos(2 * angles[..., 1]) * velocity[..., 0] + velocity[..., 2])


def _state_at(path, t, chi):
    pos = path.position(path.wrap(t))
    return pure_state(pos[..., 0], pos[..., 1], pos[..., 2], pos[..., 3], chi=chi)


def berry_connection_fd(path, t, h=FD_STEP, chi=0.0):
    """Central-difference -i <psi|dpsi/dt>, accurate to O(h^2).

    Closed paths evaluate modulo the loop; open paths require t +/- h to
    stay inside [0, 1].  The value is independent of the fixed chi.
    """
    t = np.asarray(t, dtype=float)
    if not path.closed and (np.any(t - h < 0.0) or np.any(t + h > 1.0)):
        raise StepOutOfRangeError("finite-difference stencil leaves [0, 1]")
    psi = _state_at(path, t, chi)
    dpsi = (_state_at(path, t + h, chi) - _state_at(path, t - h, chi)) / (2 * h)
    return (-1j * np.sum(np.conj(psi) * dpsi, axis=-1)).real


@dataclass(frozen=True)
class TwoFormValue:
    """Curvature coefficients at a point, indexed by coordinate pairs."""

    beta: float
    theta: float

    def coefficient(self, mu, nu):
        """F_{mu nu} with antisymmetry; unordered names from COORD_NAMES."""
        for name in (mu, nu):
            if name not in COORD_NAMES:
                raise UnsupportedPlaneError(f"unknown coordinate {name!r}")
        if mu == nu:
            return 0.0
        table = {
            ("theta", "alpha"): np.sin(2 * self.theta) * np.cos(2 * self.beta),
            ("theta", "gamma"): np.sin(2 * self.theta),
            ("beta", "alpha"): -2.0 * np.sin(self.theta) ** 2 * np.sin(2 * self.beta),
        }
        if (mu, nu) in table:
            return float(table[(mu, nu)])
        if (nu, mu) in table:
            return -float(table[(nu, mu)])
        return 0.0


def berry_curvature(beta, theta):
    """Curvature two-form of the closed-form connection at (beta, theta)."""
    return TwoFormValue(beta=float(beta), theta=float(theta))


def _simpson_legs(path, samples):
    """Per-leg Simpson nodes and weights honoring keyframe corners."""
    if samples < 16:
        raise PathTooShortError("need at least 16 quadrature samples")
    per_leg = int(np.ceil(samples / path.n_legs))
    per_leg += per_leg % 2
    per_leg = max(per_leg, 2)
    for leg in range(path.n_legs):
        t0, t1 = path.ts[leg], path.ts[leg + 1]
        nodes = np.linspace(t0, t1, per_leg + 1)
        weights = np.ones(per_leg + 1)
        weights[1:-1:2] = 4.0
        weights[2:-1:2] = 2.0
        weights *= (t1 - t0) / (3.0 * per_leg)
        yield leg, nodes, weights


def geometric_phase(path, samples=1024):
    """Line integral of the closed-form connection along the path.

    Composite Simpson quadrature is applied leg by leg so corners of the
    piecewise-linear path never fall inside a panel; the total is the sum
    of the per-leg integrals, which makes the phase exactly additive under
    concatenation of legs.
    """
    total = 0.0
    for leg, nodes, weights in _simpson_legs(path, samples):
        angles = path.position(nodes)
        velocity = np.broadcast_to(path.leg_velocity(leg), angles.shape)
        total += float(weights @ berry_connection(angles, velocity))
    return total


def geometric_phase_fd(path, samples=1024, h=FD_STEP):
    """Line integral of the finite-difference connection, the cross route.

    Gauss-Legendre nodes per leg keep every stencil strictly inside one
    leg, away from corners where the velocity jumps and away from the
    endpoints of open paths.  One Richardson level combines steps h and
    h/2, lifting the integrand accuracy to O(h^4).  The step shrinks
    automatically when a node sits closer to a leg boundary than h.
    """
    if samples < 16:
        raise PathTooShortError("need at least 16 quadrature samples")
    order = int(max(8, min(64, samples // (2 * path.n_legs))))
    nodes, weights = np.polynomial.legendre.leggauss(order)
    total = 0.0
    for leg in range(path.n_legs):
        t0, t1 = path.ts[leg], path.ts[leg + 1]
        half = 0.5 * (t1 - t0)
        ts = t0 + half * (nodes + 1.0)
        step = min(h, 0.5 * (ts[0] - t0), 0.5 * (t1 - ts[-1]))
        coarse = berry_connection_fd(path, ts, h=step)
        fine = berry_connection_fd(path, ts, h=step / 2)
        total += half * float(weights @ ((4.0 * fine - coarse) / 3.0))
    return total


def stokes_check(corner, plane, side, samples=256):
    """Line integral around a coordinate rectangle vs surface integral.

    corner: base point (alpha, beta, gamma, theta).  plane: pair of
    distinct coordinate names (mu, nu).  The rectangle runs corner ->
    corner + mu side -> + nu side -> back, matching the orientation of the
    dmu ^ dnu surface element.  Returns (line, surface), two routes to the
    same number: the connection around the boundary and the curvature over
    the interior.
    """
    mu, nu = plane
    for name in plane:
        if name not in COORD_NAMES:
            raise UnsupportedPlaneError(f"unknown coordinate {name!r}")
    if mu == nu:
        raise UnsupportedPlaneError("plane coordinates must differ")
    if side == 0.0:
        return 0.0, 0.0
    corner = np.asarray(corner, dtype=float)
    i, j = COORD_NAMES.index(mu), COORD_NAMES.index(nu)

    def offset(du, dv):
        point = corner.copy()
        point[i] += du
        point[j] += dv
        return point

    rect = from_keyframes(
        [offset(0, 0), offset(side, 0), offset(side, side), offset(0, side), offset(0, 0)],
        closed=True,
    )
    line = geometric_phase(rect, samples=max(samples, 16))

    n = max(4, samples // 32)
    n += n % 2
    grid = np.linspace(0.0, side, n + 1)
    w = np.ones(n + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    w *= side / (3.0 * n)
    surface = 0.0
    for du, wu in zip(grid, w):
        for dv, wv in zip(grid, w):
            point = offset(du, dv)
            f = berry_curvature(point[1], point[3]).coefficient(mu, nu)
            surface += wu * wv * f
    return line, float(surface)

"""Frame of eigenvectors, matrix-valued connections and Wilson-loop holonomy.

The Hamiltonian has two levels at energy e1 and one at e3, with closed-form
entries parameterized by the first four Euler angles.  Its eigenvectors form
the closed-form frame (v1, v2, v3); v1 and v2 share e1 and v3 carries e3.

The connection of frame vector a against b is A_ab = i <v_a | d v_b>.
Closed forms exist for the single level {1} (a scalar) and for the pair
{2, 3} (a 2x2 Hermitian-valued form), and the pair pulled-back matrix takes
its characteristic sin(theta) off-diagonals only for {2, 3}: the 2x2
connection of the degenerate pair {1, 2} carries cos(theta) there instead,
which frame_connection_fd exposes numerically.  The test suite pins both
facts.  Holonomies are ordered products of midpoint-rule exponentials with
later segments composing on the left.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSplitError, MixedLevelsError, PathNotClosedError, StepOutOfRangeError

FD_STEP_FRAME = 1e-5
FD_STEP_HOLONOMY = 1e-6


@dataclass(frozen=True)
class HamiltonianParams:
    """Energies (e1 twice, e3 once) and the four coset angles."""

    e1: float
    e3: float
    alpha: float = 0.0
    beta: float = 0.0
    gamma: float = 0.0
    theta: float = 0.0

    @property
    def angles(self):
        return np.array([self.alpha, self.beta, self.gamma, self.theta])


def level_energy(level, e1, e3):
    """Energy of frame level 1, 2 or 3."""
    if level not in (1, 2, 3):
        raise ValueError(f"level {level} outside 1..3")
    return e3 if level == 3 else e1


def hamiltonian_grid(e1, e3, angles):
    """Closed-form Hamiltonian at each angle quadruple.

    angles has shape (..., 4); the result has shape (..., 3, 3).
    """
    angles = np.asarray(angles, dtype=float)
    a, b, t = angles[..., 0], angles[..., 1], angles[..., 3]
    g = angles[..., 2]
    cb, sb = np.cos(b), np.sin(b)
    ct, st = np.cos(t), np.sin(t)
    de = e1 - e3
    h = np.zeros(angles.shape[:-1] + (3, 3), dtype=complex)
    h[..., 0, 0] = e1 * (cb**2 * ct**2 + sb**2) + e3 * cb**2 * st**2
    h[..., 0, 1] = de * np.exp(-2j * a) * cb * sb * st**2
    h[..., 0, 2] = -de * np.exp(-1j * (a + g)) * cb * st * ct
    h[..., 1, 1] = e1 * (sb**2 * ct**2 + cb**2) + e3 * sb**2 * st**2
    h[..., 1, 2] = de * np.exp(1j * (a - g)) * sb * st * ct
    h[..., 2, 2] = e1 * st**2 + e3 * ct**2
    h[..., 1, 0] = np.conj(h[..., 0, 1])
    h[..., 2, 0] = np.conj(h[..., 0, 2])
    h[..., 2, 1] = np.conj(h[..., 1, 2])
    return h


def hamiltonian(params):
    """Closed-form 3x3 Hamiltonian for the given parameters."""
    return hamiltonian_grid(params.e1, params.e3, params.angles)


def frame_grid(angles):
    """Closed-form eigenvector frame at each angle quadruple.

    Returns matrices of shape (..., 3, 3) whose columns are (v1, v2, v3).
    The frame is independent of the energies and 2*pi periodic in every
    angle.
    """
    angles = np.asarray(angles, dtype=float)
    a, b, g, t = angles[..., 0], angles[..., 1], angles[..., 2], angles[..., 3]
    cb, sb = np.cos(b), np.sin(b)
    ct, st = np.cos(t), np.sin(t)
    ep = np.exp(-1j * (a + g))
    em = np.exp(1j * (a - g))
    v = np.zeros(angles.shape[:-1] + (3, 3), dtype=complex)
    v[..., 0, 0] = ep * cb * ct
    v[..., 1, 0] = -em * sb * ct
    v[..., 2, 0] = -st
    v[..., 0, 1] = np.conj(em) * sb
    v[..., 1, 1] = np.conj(ep) * cb
    v[..., 0, 2] = ep * cb * st
    v[..., 1, 2] = -em * sb * st
    v[..., 2, 2] = ct
    return v


@dataclass(frozen=True)
class EigenFrame:
    """Closed-form eigenvectors (columns) with their energies."""

    vectors: np.ndarray
    values: np.ndarray


def eigenframe(params):
    """Closed-form frame of eigenvectors of hamiltonian(params).

    Columns k = 0, 1, 2 are the frame vectors for levels 1, 2, 3 with
    energies (e1, e1, e3).  Raises DegenerateSplitError when e1 == e3,
    where the level split loses meaning.
    """
    if params.e1 == params.e3:
        raise DegenerateSplitError("e1 == e3 leaves no isolated level")
    return EigenFrame(
        vectors=frame_grid(params.angles),
        values=np.array([params.e1, params.e1, params.e3]),
    )


def connection_level1(angles, velocity):
    """Scalar pulled-back connection i <v1 | dv1/dt> of frame level 1.

    angles, velocity: arrays of shape (..., 4).  Only beta, theta and the
    alpha and gamma velocities enter.
    """
    angles = np.asarray(angles, dtype=float)
    velocity = np.asarray(velocity, dtype=float)
    ct2 = np.cos(angles[..., 3]) ** 2
    return ct2 * (np.cos(2 * angles[..., 1]) * velocity[..., 0] + velocity[..., 2])


def connection_pair23(angles, velocity):
    """2x2 pulled-back connection of the frame pair (v2, v3).

    angles, velocity: arrays of shape (..., 4); returns shape (..., 2, 2).
    Entries are i <v_a | dv_b/dt> for a, b in (2, 3); the theta velocity
    has zero coefficient throughout and alpha itself never appears.
    """
    angles = np.asarray(angles, dtype=float)
    velocity = np.asarray(velocity, dtype=float)
    b, g, t = angles[..., 1], angles[..., 2], angles[..., 3]
    ad, bd, gd = velocity[..., 0], velocity[..., 1], velocity[..., 2]
    c2b, s2b = np.cos(2 * b), np.sin(2 * b)
    st = np.sin(t)
    off = np.exp(-2j * g) * (s2b * st * ad - 1j * st * bd)
    m = np.zeros(np.broadcast(b, ad).shape + (2, 2), dtype=complex)
    m[..., 0, 0] = -c2b * ad - gd
    m[..., 0, 1] = off
    m[..., 1, 0] = np.conj(off)
    m[..., 1, 1] = c2b * st**2 * ad + st**2 * gd
    return m


def pair23_coefficients(beta, gamma, theta):
    """Per-coordinate Hermitian coefficient matrices of the (2, 3) form.

    Returns {'alpha': 2x2, 'beta': 2x2, 'gamma': 2x2}; the theta
    coefficient vanishes identically and is omitted.
    """
    basis = np.eye(4)
    angles = np.array([0.0, beta, gamma, theta])
    return {
        name: connection_pair23(angles, basis[k])
        for k, name in zip((0, 1, 2), ("alpha", "beta", "gamma"))
    }


def _level_indices(levels):
    levels = tuple(sorted(set(int(l) for l in levels)))
    if not levels or any(l not in (1, 2, 3) for l in levels):
        raise ValueError("levels must be a nonempty subset of {1, 2, 3}")
    return levels


def frame_connection_fd(path, levels, t, h=FD_STEP_FRAME):
    """Central-difference connection matrix i <v_a | dv_b/dt> of a level set.

    t may be a scalar or an array; the result has shape t.shape + (k, k)
    ordered like the sorted level set.  Closed paths wrap the stencil
    around the loop; open paths require t +/- h inside [0, 1].  Any level
    subset is accepted, including the energy-degenerate pair (1, 2).
    """
    levels = _level_indices(levels)
    idx = [l - 1 for l in levels]
    t = np.asarray(t, dtype=float)
    if not path.closed and (np.any(t - h < 0.0) or np.any(t + h > 1.0)):
        raise StepOutOfRangeError("finite-difference stencil leaves [0, 1]")
    frames = {
        shift: frame_grid(path.position(path.wrap(t + shift)))[..., :, idx]
        for shift in (-h, 0.0, h)
    }
    dv = (frames[h] - frames[-h]) / (2 * h)
    return 1j * np.einsum("...ia,...ib->...ab", np.conj(frames[0.0]), dv)


def pulled_back_connection(path, levels, t, h=FD_STEP_HOLONOMY):
    """Connection matrix A(t) of the level set pulled back along the path.

    Uses the closed forms for levels (1,) and (2, 3); every other subset
    falls back to central differences on the closed-form frame,
    symmetrized to exact Hermiticity.
    """
    levels = _level_indices(levels)
    t = np.asarray(t, dtype=float)
    angles = path.position(path.wrap(t))
    velocity = path.velocity(path.wrap(t))
    if levels == (1,):
        return connection_level1(angles, velocity)[..., None, None].astype(complex)
    if levels == (2, 3):
        return connection_pair23(angles, velocity)
    fd = frame_connection_fd(path, levels, t, h=h)
    return 0.5 * (fd + np.conj(np.swapaxes(fd, -1, -2)))


def _expm_i_hermitian_batch(m):
    """exp(i m) for a batch (..., k, k) of Hermitian matrices."""
    w, v = np.linalg.eigh(m)
    return np.einsum("...ij,...j,...kj->...ik", v, np.exp(1j * w), np.conj(v))


def ordered_exponential(values, weights):
    """Ordered product of exp(i values[k] weights[k]), later factors left.

    values: (n, k, k) Hermitian samples of a connection; weights: (n,)
    segment lengths.  The product is reduced pairwise, which keeps the
    composition order and vectorizes the matrix multiplies.
    """
    values = np.asarray(values, dtype=complex)
    weights = np.asarray(weights, dtype=float)
    factors = _expm_i_hermitian_batch(values * weights[:, None, None])
    while factors.shape[0] > 1:
        n = factors.shape[0]
        paired = np.matmul(factors[1 : n - n % 2 : 2], factors[0 : n - n % 2 : 2])
        if n % 2:
            factors = np.concatenate([paired, factors[-1:]], axis=0)
        else:
            factors = paired
    return factors[0]


@dataclass(frozen=True)
class Holonomy:
    """Wilson-loop result: unitary matrix over the sorted level set."""

    matrix: np.ndarray
    levels: tuple
    segments: int


def holonomy(path, levels, segments=4096, h=FD_STEP_HOLONOMY):
    """Path-ordered exponential of the level-set connection around a loop.

    The loop is cut into segments aligned with the keyframe legs; each
    contributes exp(i A(t_mid) dt) evaluated at its midpoint, composed
    with later segments on the left.  Converges at second order in the
    segment length.
    """
    if not path.closed:
        raise PathNotClosedError("holonomy requires a closed path")
    if segments < 64:
        raise ValueError("need at least 64 segments")
    levels = _level_indices(levels)
    per_leg = int(np.ceil(segments / path.n_legs))
    mids = []
    widths = []
    for leg in range(path.n_legs):
        t0, t1 = path.ts[leg], path.ts[leg + 1]
        dt = (t1 - t0) / per_leg
        mids.append(t0 + dt * (np.arange(per_leg) + 0.5))
        widths.append(np.full(per_leg, dt))
    mids = np.concatenate(mids)
    widths = np.concatenate(widths)
    values = pulled_back_connection(path, levels, mids, h=h)
    matrix = ordered_exponential(values, widths)
    return Holonomy(matrix=matrix, levels=levels, segments=int(per_leg * path.n_legs))


def _distinct_energies(levels, e1, e3):
    return sorted({level_energy(l, e1, e3) for l in levels})


def require_common_energy(levels, e1, e3):
    """The energy shared by a level set, or MixedLevelsError."""
    energies = _distinct_energies(_level_indices(levels), e1, e3)
    if len(energies) > 1:
        raise MixedLevelsError(
            f"levels {tuple(levels)} span energies {energies}; a common eigenvalue is required"
        )
    return energies[0]

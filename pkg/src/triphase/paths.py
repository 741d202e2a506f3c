"""Piecewise-linear parameter paths in the (alpha, beta, gamma, theta) space.

A path is a list of keyframe quadruples with strictly increasing parameter
values t in [0, 1]; between keyframes every coordinate is linear in t.
All formulas in the package are 2*pi periodic in each coordinate, so a
closed path is one whose endpoints agree componentwise modulo 2*pi; the raw
difference is kept so winding loops (for example alpha from 0 to 2*pi)
integrate to a nonzero circulation.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import PathNotClosedError, PathTooShortError

COORD_NAMES = ("alpha", "beta", "gamma", "theta")
TWO_PI = 2.0 * np.pi
_CLOSURE_TOL = 1e-9


def _wrapped_gap(a, b):
    """Signed distance from a to b modulo 2*pi, in (-pi, pi]."""
    return (np.asarray(b) - np.asarray(a) + np.pi) % TWO_PI - np.pi


@dataclass(frozen=True)
class ParameterPath:
    """Piecewise-linear curve through coordinate space.

    keyframes: array of shape (n, 4), one row per keyframe.
    ts: strictly increasing parameter values, ts[0] = 0 and ts[-1] = 1.
    closed: endpoints are congruent modulo 2*pi in every coordinate.
    """

    keyframes: np.ndarray
    ts: np.ndarray
    closed: bool = False

    def __post_init__(self):
        keyframes = np.atleast_2d(np.asarray(self.keyframes, dtype=float))
        if keyframes.ndim != 2 or keyframes.shape[1] != 4:
            raise ValueError("keyframes must have shape (n, 4)")
        if keyframes.shape[0] < 2:
            raise PathTooShortError("a path needs at least 2 keyframes")
        ts = np.asarray(self.ts, dtype=float)
        if ts.shape != (keyframes.shape[0],):
            raise ValueError("ts must have one value per keyframe")
        if not (np.all(np.diff(ts) > 0) and ts[0] == 0.0 and ts[-1] == 1.0):
            raise ValueError("ts must increase strictly from 0 to 1")
        if self.closed:
            gap = np.max(np.abs(_wrapped_gap(keyframes[0], keyframes[-1])))
            if gap > _CLOSURE_TOL:
                raise PathNotClosedError(
                    f"endpoints differ by {gap:.3e} modulo 2*pi"
                )
        object.__setattr__(self, "keyframes", keyframes)
        object.__setattr__(self, "ts", ts)

    @property
    def n_legs(self):
        return self.keyframes.shape[0] - 1

    def leg_velocity(self, leg):
        """Constant coordinate velocity d(angles)/dt on the given leg."""
        dt = self.ts[leg + 1] - self.ts[leg]
        return (self.keyframes[leg + 1] - self.keyframes[leg]) / dt

    def position(self, t):
        """Coordinates at parameter t (scalar or array), clamped to [0, 1]."""
        t = np.asarray(t, dtype=float)
        cols = [np.interp(t, self.ts, self.keyframes[:, k]) for k in range(4)]
        return np.stack(cols, axis=-1)

    def velocity(self, t):
        """Coordinate velocity at t; at a corner the right leg wins."""
        t = np.asarray(t, dtype=float)
        leg = np.clip(np.searchsorted(self.ts, t, side="right") - 1, 0, self.n_legs - 1)
        dt = self.ts[leg + 1] - self.ts[leg]
        return (self.keyframes[leg + 1] - self.keyframes[leg]) / dt[..., None]

    def wrap(self, t):
        """Reduce t to [0, 1), modulo the loop for closed paths."""
        if self.closed:
            return np.asarray(t, dtype=float) % 1.0
        return np.asarray(t, dtype=float)


def from_keyframes(keyframes, ts=None, closed=False):
    """Path through the given quadruples, uniformly spaced unless ts given."""
    keyframes = np.atleast_2d(np.asarray(keyframes, dtype=float))
    if ts is None:
        n = keyframes.shape[0]
        if n < 2:
            raise PathTooShortError("a path needs at least 2 keyframes")
        ts = np.linspace(0.0, 1.0, n)
    return ParameterPath(keyframes=keyframes, ts=np.asarray(ts, dtype=float), closed=closed)


def coordinate_circle(angle, center=(0.0, 0.0, 0.0, 0.0), winding=1):
    """Closed loop sweeping one coordinate through winding full turns.

    The chosen coordinate runs linearly from its center value through
    winding * 2*pi; the other three stay fixed.
    """
    if angle not in COORD_NAMES:
        raise ValueError(f"angle must be one of {COORD_NAMES}")
    if winding == 0:
        raise ValueError("winding must be a nonzero integer")
    center = np.asarray(center, dtype=float)
    if center.shape != (4,):
        raise ValueError("center must provide all four coordinates")
    end = center.copy()
    end[COORD_NAMES.index(angle)] += TWO_PI * winding
    return ParameterPath(
        keyframes=np.stack([center, end]), ts=np.array([0.0, 1.0]), closed=True
    )

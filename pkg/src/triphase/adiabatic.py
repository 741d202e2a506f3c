"""Adiabatic Schroedinger evolution and geometric-part extraction.

A sweep drives the Hamiltonian along a parameter path over physical time
span total_time, solving i dpsi/dt = H(path(t / total_time)) psi with a
classic fourth-order Runge-Kutta step and per-step renormalization.  For a
closed sweep started in frame vectors of one energy, the overlap of the
final states with the initial frame, with the dynamical factor removed and
polar-projected to the nearest unitary, converges to the Wilson-loop
holonomy of that level set as total_time grows.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import MixedLevelsError, PathNotClosedError, StepCountTooLowError
from .nonabelian import (
    frame_grid,
    hamiltonian_grid,
    holonomy,
    level_energy,
    require_common_energy,
    _level_indices,
)

STEPS_PER_TIME = 200
NORM_DRIFT_LIMIT = 1e-6


@dataclass(frozen=True)
class Sweep:
    """Path plus energies, time span and integrator resolution."""

    path: object
    e1: float
    e3: float
    total_time: float
    steps: int = 0

    def resolved_steps(self):
        if self.steps:
            return int(self.steps)
        return max(100, int(round(STEPS_PER_TIME * self.total_time)))


def propagate(sweep, initial):
    """Integrate the sweep from the given initial column(s).

    initial: shape (3,) or (3, k).  Returns (final, max_drift) where
    max_drift is the largest per-step deviation of any column norm from 1
    before renormalization.  Raises StepCountTooLowError when that drift
    exceeds 1e-6, the sign that the step count undersamples the dynamics.
    """
    steps = sweep.resolved_steps()
    dt = sweep.total_time / steps
    s_grid = np.linspace(0.0, 1.0, 2 * steps + 1)
    h_grid = hamiltonian_grid(sweep.e1, sweep.e3, sweep.path.position(s_grid))
    psi = np.array(initial, dtype=complex)
    squeeze = psi.ndim == 1
    if squeeze:
        psi = psi[:, None]
    max_drift = 0.0
    for k in range(steps):
        h0, hm, h1 = h_grid[2 * k], h_grid[2 * k + 1], h_grid[2 * k + 2]
        k1 = -1j * (h0 @ psi)
        k2 = -1j * (hm @ (psi + 0.5 * dt * k1))
        k3 = -1j * (hm @ (psi + 0.5 * dt * k2))
        k4 = -1j * (h1 @ (psi + dt * k3))
        psi = psi + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        norms = np.linalg.norm(psi, axis=0)
        max_drift = max(max_drift, float(np.max(np.abs(norms - 1.0))))
        psi = psi / norms
    if max_drift > NORM_DRIFT_LIMIT:
        raise StepCountTooLowError(
            f"norm drift {max_drift:.3e} exceeds {NORM_DRIFT_LIMIT:.1e}; raise steps"
        )
    return (psi[:, 0] if squeeze else psi), max_drift


def dynamical_phase(energy, total_time):
    """Phase -E * T accumulated by a stationary eigenstate."""
    return -float(energy) * float(total_time)


@dataclass(frozen=True)
class PhaseReport:
    """Result of one geometric-part extraction."""

    levels: tuple
    total_time: float
    dynamical_phase: float
    overlap: np.ndarray
    geometric_part: np.ndarray
    residual: float
    norm_drift: float

    @property
    def phase(self):
        """Geometric phase angle; only meaningful for a single level."""
        if self.geometric_part.shape != (1, 1):
            raise ValueError("phase is defined for single-level reports")
        return float(np.angle(self.geometric_part[0, 0]))


def extract_geometric(sweep, levels):
    """Evolve a level set around a closed sweep and split off its holonomy.

    The levels must share one eigenvalue (the degenerate pair (1, 2), or a
    single level); the overlap matrix O_ab = <v_a(0) | psi_b(T)> times
    exp(+i E T) is polar-projected to the nearest unitary, reported with
    the projection residual.  Residuals above about 0.1 mean the sweep was
    not adiabatic enough for the extraction to be trusted.
    """
    if not sweep.path.closed:
        raise PathNotClosedError("geometric extraction requires a closed sweep")
    levels = _level_indices(levels)
    energy = require_common_energy(levels, sweep.e1, sweep.e3)
    idx = [l - 1 for l in levels]
    frame0 = frame_grid(sweep.path.position(0.0))[:, idx]
    final, drift = propagate(sweep, frame0)
    overlap = frame0.conj().T @ final
    raw = overlap * np.exp(1j * energy * sweep.total_time)
    u, s, vh = np.linalg.svd(raw)
    return PhaseReport(
        levels=levels,
        total_time=float(sweep.total_time),
        dynamical_phase=dynamical_phase(energy, sweep.total_time),
        overlap=overlap,
        geometric_part=u @ vh,
        residual=float(np.max(np.abs(s - 1.0))),
        norm_drift=float(drift),
    )


@dataclass(frozen=True)
class ConvergenceEntry:
    total_time: float
    deviation: float
    residual: float


@dataclass(frozen=True)
class ConvergenceStudy:
    """Raw deviation-versus-time data; no fitting is applied."""

    levels: tuple
    prediction: np.ndarray
    entries: list = field(default_factory=list)


def convergence_study(path, e1, e3, levels, t_ladder, steps_per_time=STEPS_PER_TIME,
                      prediction_segments=4096):
    """Deviation of extracted holonomies from the Wilson-loop prediction.

    For each T in the ladder the sweep is integrated with steps
    proportional to T and the operator-norm distance between the extracted
    geometric part and holonomy(path, levels) is recorded.
    """
    levels = _level_indices(levels)
    prediction = holonomy(path, levels, segments=prediction_segments).matrix
    entries = []
    for total_time in t_ladder:
        sweep = Sweep(
            path=path,
            e1=e1,
            e3=e3,
            total_time=float(total_time),
            steps=max(100, int(round(steps_per_time * total_time))),
        )
        report = extract_geometric(sweep, levels)
        deviation = float(np.linalg.norm(report.geometric_part - prediction, 2))
        entries.append(
            ConvergenceEntry(
                total_time=float(total_time),
                deviation=deviation,
                residual=report.residual,
            )
        )
    return ConvergenceStudy(levels=levels, prediction=prediction, entries=entries)

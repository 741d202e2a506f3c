"""Geometric phases of three-state systems built on the SU(3) Euler-angle
parameterization.

The package computes the generalized Bloch vector and density matrix of a
qutrit pure state, the abelian Berry connection, curvature and closed-loop
geometric phase, the matrix-valued connection and Wilson-loop holonomy of a
frame of Hamiltonian eigenvectors, and cross-checks everything against
adiabatic Schroedinger evolution.  A FastAPI service exposes the same
computations over HTTP and the command line client drives that service.
"""

__version__ = "0.1.0"

from . import abelian, adiabatic, euler, gellmann, linalg3, nonabelian, paths, states

__all__ = [
    "abelian",
    "adiabatic",
    "euler",
    "gellmann",
    "linalg3",
    "nonabelian",
    "paths",
    "states",
    "__version__",
]

"""Gell-Mann matrices, the symmetric d tensor and the star product.

Index 0 of the matrix stack is the 3x3 identity; indices 1..8 are the
standard Gell-Mann matrices, normalized so Tr(lam_j lam_k) = 2 delta_jk.
Coefficient vectors over the traceless generators are numpy arrays of
shape (8,) indexed 0..7 for generators 1..8.
"""

import numpy as np

SQRT3 = np.sqrt(3.0)

GELL_MANN = np.zeros((9, 3, 3), dtype=complex)
GELL_MANN[0] = np.eye(3)
GELL_MANN[1] = [[0, 1, 0], [1, 0, 0], [0, 0, 0]]
GELL_MANN[2] = [[0, -1j, 0], [1j, 0, 0], [0, 0, 0]]
GELL_MANN[3] = [[1, 0, 0], [0, -1, 0], [0, 0, 0]]
GELL_MANN[4] = [[0, 0, 1], [0, 0, 0], [1, 0, 0]]
GELL_MANN[5] = [[0, 0, -1j], [0, 0, 0], [1j, 0, 0]]
GELL_MANN[6] = [[0, 0, 0], [0, 0, 1], [0, 1, 0]]
GELL_MANN[7] = [[0, 0, 0], [0, 0, -1j], [0, 1j, 0]]
GELL_MANN[8] = np.diag([1.0, 1.0, -2.0]) / SQRT3
GELL_MANN.setflags(write=False)


def gellmann(k):
    """Generator k with k in 0..8; k = 0 is the identity."""
    if not 0 <= k <= 8:
        raise IndexError(f"generator index {k} outside 0..8")
    return GELL_MANN[k]


def _build_d_tensor():
    # Independent nonzero entries; the tensor is totally symmetric.
    base = {
        (1, 1, 8): 1 / SQRT3,
        (2, 2, 8): 1 / SQRT3,
        (3, 3, 8): 1 / SQRT3,
        (8, 8, 8): -1 / SQRT3,
        (4, 4, 8): -1 / (2 * SQRT3),
        (5, 5, 8): -1 / (2 * SQRT3),
        (6, 6, 8): -1 / (2 * SQRT3),
        (7, 7, 8): -1 / (2 * SQRT3),
        (1, 4, 6): 0.5,
        (1, 5, 7): 0.5,
        (2, 4, 7): -0.5,
        (2, 5, 6): 0.5,
        (3, 4, 4): 0.5,
        (3, 5, 5): 0.5,
        (3, 6, 6): -0.5,
        (3, 7, 7): -0.5,
    }
    tensor = np.zeros((8, 8, 8))
    for (i, j, k), value in base.items():
        for p, q, r in {(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)}:
            tensor[p - 1, q - 1, r - 1] = value
    tensor.setflags(write=False)
    return tensor


D_TENSOR = _build_d_tensor()


def d_tensor(i, j, k):
    """Totally symmetric structure constant d_ijk, indices in 1..8."""
    for idx in (i, j, k):
        if not 1 <= idx <= 8:
            raise IndexError(f"d tensor index {idx} outside 1..8")
    return float(D_TENSOR[i - 1, j - 1, k - 1])


def star(a, b):
    """Symmetric star product (a * b)_i = sqrt(3) d_ijk a_j b_k."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != (8,) or b.shape != (8,):
        raise ValueError("star product expects coefficient vectors of shape (8,)")
    return SQRT3 * np.einsum("ijk,j,k->i", D_TENSOR, a, b)


def decompose(m):
    """Split a 3x3 matrix into identity and generator coefficients.

    Returns (c0, r) with m = c0 * I + sum_i r[i] * lam_{i+1}.  For
    Hermitian input both parts are real; small imaginary round-off from
    the traces is discarded.
    """
    m = np.asarray(m, dtype=complex)
    c0 = np.trace(m).real / 3.0
    r = np.array([0.5 * np.trace(m @ GELL_MANN[k]).real for k in range(1, 9)])
    return c0, r


def compose(c0, r):
    """Inverse of decompose: c0 * I + sum_i r[i] * lam_{i+1}."""
    r = np.asarray(r, dtype=float)
    if r.shape != (8,):
        raise ValueError("compose expects coefficients of shape (8,)")
    return c0 * np.eye(3, dtype=complex) + np.einsum("i,ijk->jk", r, GELL_MANN[1:])

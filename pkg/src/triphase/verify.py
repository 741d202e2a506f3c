"""Seeded property suites behind the verify command.

Each suite returns a report dict with one entry per check:
{"name", "value", "criterion", "passed"}.  Values are the measured worst
errors (or ratios), criteria are human-readable bounds, and a suite passes
when every check does.  All randomness comes from the seed, so reports are
reproducible bit for bit.
"""

import numpy as np

from . import abelian, euler, gellmann, linalg3, nonabelian, paths, states

PLANES = (
    ("alpha", "beta"),
    ("alpha", "gamma"),
    ("alpha", "theta"),
    ("beta", "gamma"),
    ("beta", "theta"),
    ("gamma", "theta"),
)


def sample_coords(rng, count):
    """Random coordinate quadruples over the canonical ranges."""
    return np.stack(
        [
            rng.uniform(0.0, np.pi, count),
            rng.uniform(0.0, np.pi / 2, count),
            rng.uniform(0.0, np.pi, count),
            rng.uniform(0.0, np.pi / 2, count),
        ],
        axis=-1,
    )


def _check(name, value, bound, kind="max"):
    if kind == "max":
        passed = value <= bound
        criterion = f"<= {bound:g}"
    else:
        lo, hi = bound
        passed = lo <= value <= hi
        criterion = f"in [{lo:g}, {hi:g}]"
    return {"name": name, "value": float(value), "criterion": criterion, "passed": bool(passed)}


def algebra_suite(seed=0):
    rng = np.random.default_rng(seed)
    lam = gellmann.GELL_MANN
    eye = np.eye(3)

    worst_tr = max(
        abs(np.trace(lam[j] @ lam[k]) - 2.0 * (j == k))
        for j in range(1, 9)
        for k in range(1, 9)
    )
    worst_anti = 0.0
    for i in range(1, 9):
        for j in range(1, 9):
            anti = lam[i] @ lam[j] + lam[j] @ lam[i]
            expected = (4.0 / 3.0) * (i == j) * eye
            expected = expected + 2.0 * np.einsum(
                "k,kab->ab", gellmann.D_TENSOR[i - 1, j - 1], lam[1:]
            )
            worst_anti = max(worst_anti, linalg3.max_abs(anti - expected))
    worst_d = max(
        abs(
            0.25 * np.trace((lam[i] @ lam[j] + lam[j] @ lam[i]) @ lam[k]).real
            - gellmann.d_tensor(i, j, k)
        )
        for i in range(1, 9)
        for j in range(1, 9)
        for k in range(1, 9)
    )
    worst_star = 0.0
    for _ in range(20):
        a, b = rng.normal(size=8), rng.normal(size=8)
        s, c = rng.normal(), rng.normal()
        worst_star = max(
            worst_star,
            np.max(np.abs(gellmann.star(a, b) - gellmann.star(b, a))),
            np.max(
                np.abs(
                    gellmann.star(s * a + c * b, b)
                    - s * gellmann.star(a, b)
                    - c * gellmann.star(b, b)
                )
            ),
        )
    checks = [
        _check("trace_orthonormality", worst_tr, 1e-14),
        _check("anticommutator_identity_64_pairs", worst_anti, 1e-14),
        _check("d_tensor_trace_oracle_512_triples", worst_d, 1e-14),
        _check("star_symmetric_bilinear", worst_star, 1e-12),
    ]
    return _report("algebra", seed, checks)


def purity_suite(seed=0, count=1000):
    rng = np.random.default_rng(seed)
    coords = sample_coords(rng, count)
    worst_norm = worst_idem = worst_routes = worst_diag = 0.0
    for alpha, beta, gamma, theta in coords:
        n = states.bloch_vector(alpha, beta, gamma, theta)
        worst_norm = max(worst_norm, abs(float(n @ n) - 1.0))
        worst_idem = max(worst_idem, float(np.max(np.abs(gellmann.star(n, n) - n))))
        psi = states.pure_state(alpha, beta, gamma, theta)
        outer = np.outer(psi, psi.conj())
        from_n = states.density_from_bloch(n)
        from_coset = euler.coset_project(euler.coset_representative(alpha, beta, gamma, theta))
        worst_routes = max(
            worst_routes,
            linalg3.max_abs(outer - from_n),
            linalg3.max_abs(outer - from_coset),
        )
    for theta_s, phi_s in rng.uniform(0.0, np.pi, size=(100, 2)):
        rho = states.diagonal_density(theta_s, phi_s)
        worst_diag = max(
            worst_diag,
            abs(np.trace(rho).real - 1.0),
            float(-min(0.0, np.min(np.diag(rho).real))),
        )
    checks = [
        _check(f"unit_norm_{count}_samples", worst_norm, 1e-9),
        _check(f"star_idempotent_{count}_samples", worst_idem, 1e-9),
        _check("density_route_agreement", worst_routes, 1e-12),
        _check("diagonal_density_trace", worst_diag, 1e-15),
    ]
    return _report("purity", seed, checks)


def adjoint_suite(seed=0, count=200):
    rng = np.random.default_rng(seed)
    worst_row8 = worst_orth = worst_det = worst_hom = 0.0
    for alpha, beta, gamma, theta in sample_coords(rng, count):
        u = euler.coset_representative(alpha, beta, gamma, theta)
        r = euler.adjoint_rep(u)
        n = states.bloch_vector(alpha, beta, gamma, theta)
        worst_row8 = max(worst_row8, float(np.max(np.abs(r[7] + n))))
        worst_orth = max(worst_orth, linalg3.max_abs(r @ r.T - np.eye(8)))
        worst_det = max(worst_det, abs(np.linalg.det(r) - 1.0))
    for _ in range(20):
        x, y = sample_coords(rng, 2)
        u = euler.coset_representative(*x)
        v = euler.coset_representative(*y)
        # rows are generator images, so composition reverses matrix order
        worst_hom = max(
            worst_hom,
            linalg3.max_abs(euler.adjoint_rep(u @ v) - euler.adjoint_rep(v) @ euler.adjoint_rep(u)),
        )
    checks = [
        _check(f"adjoint_row8_is_minus_bloch_{count}_samples", worst_row8, 1e-12),
        _check("adjoint_orthogonality", worst_orth, 1e-12),
        _check("adjoint_determinant", worst_det, 1e-10),
        _check("adjoint_homomorphism_20_pairs", worst_hom, 1e-11),
    ]
    return _report("adjoint", seed, checks)


def stokes_suite(seed=0, rectangles=50, side=0.05):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for plane in PLANES:
        for _ in range(rectangles):
            corner = sample_coords(rng, 1)[0]
            line, surface = abelian.stokes_check(corner, plane, side)
            worst = max(worst, abs(line - surface))
    checks = [
        _check(
            f"line_vs_surface_{rectangles}_rectangles_per_plane_side_{side:g}",
            worst,
            1e-6,
        )
    ]
    return _report("stokes", seed, checks)


def wiggle_loop():
    """Closed keyframe loop with nonconstant, noncommuting pullbacks."""
    return paths.from_keyframes(
        [
            [0.0, 0.3, 0.2, 0.8],
            [np.pi / 2, 0.7, 0.9, 1.1],
            [np.pi, 0.4, 1.7, 0.6],
            [3 * np.pi / 2, 0.8, 0.3, 1.2],
            [2 * np.pi, 0.3, 0.2, 0.8],
        ],
        closed=True,
    )


def _random_loop(rng):
    base = sample_coords(rng, 3)
    frames = np.vstack([base, base[:1]])
    frames[-1, 0] += 2 * np.pi
    return paths.from_keyframes(frames, closed=True)


def _gauge_family(rng):
    sigma = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    sigma = 0.5 * (sigma + sigma.conj().T)
    sigma *= 0.5 / np.linalg.norm(sigma, 2)
    sigma0 = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    sigma0 = 0.5 * (sigma0 + sigma0.conj().T)
    w0, v0 = np.linalg.eigh(sigma0)
    g0 = (v0 * np.exp(1j * w0)) @ v0.conj().T
    return sigma, g0


def _gauge_transformed_holonomy(path, levels, sigma, g0, segments):
    per_leg = int(np.ceil(segments / path.n_legs))
    mids, widths = [], []
    for leg in range(path.n_legs):
        t0, t1 = path.ts[leg], path.ts[leg + 1]
        dt = (t1 - t0) / per_leg
        mids.append(t0 + dt * (np.arange(per_leg) + 0.5))
        widths.append(np.full(per_leg, dt))
    mids = np.concatenate(mids)
    widths = np.concatenate(widths)
    a = nonabelian.pulled_back_connection(path, levels, mids)
    f = np.sin(2 * np.pi * mids)
    fdot = 2 * np.pi * np.cos(2 * np.pi * mids)
    w, v = np.linalg.eigh(sigma)
    rot = np.einsum("ij,nj,kj->nik", v, np.exp(1j * np.outer(f, w)), v.conj())
    g = g0 @ rot
    gdag = np.conj(np.swapaxes(g, -1, -2))
    a_rot = np.einsum("nij,njk,nkl->nil", gdag, a, g) - sigma[None] * fdot[:, None, None]
    return nonabelian.ordered_exponential(a_rot, widths)


def holonomy_suite(seed=0):
    rng = np.random.default_rng(seed)
    loop = wiggle_loop()

    worst_unitary = 0.0
    for path in [loop] + [_random_loop(rng) for _ in range(4)]:
        for levels in ((1,), (2, 3)):
            w = nonabelian.holonomy(path, levels, segments=4096).matrix
            worst_unitary = max(
                worst_unitary, linalg3.max_abs(w @ w.conj().T - np.eye(w.shape[0]))
            )

    worst_const = 0.0
    for beta, theta in rng.uniform(0.1, 1.4, size=(5, 2)):
        gamma = rng.uniform(0.0, np.pi)
        circle = paths.coordinate_circle("alpha", center=(0.0, beta, gamma, theta))
        basis = np.eye(4)
        pulled = nonabelian.connection_pair23(
            np.array([0.0, beta, gamma, theta]), basis[0] * 2 * np.pi
        )
        w_direct = nonabelian._expm_i_hermitian_batch(pulled[None])[0]
        w = nonabelian.holonomy(circle, (2, 3), segments=4096).matrix
        worst_const = max(worst_const, linalg3.max_abs(w - w_direct))

    deltas = []
    for segments in (256, 512, 1024):
        deltas.append(nonabelian.holonomy(loop, (2, 3), segments=segments).matrix)
    ratio = np.linalg.norm(deltas[1] - deltas[0], 2) / np.linalg.norm(deltas[2] - deltas[1], 2)

    sigma, g0 = _gauge_family(rng)
    w = nonabelian.holonomy(loop, (2, 3), segments=4096).matrix
    w_const = _gauge_transformed_holonomy(loop, (2, 3), np.zeros((2, 2)), g0, 4096)
    err_const = linalg3.max_abs(w_const - g0.conj().T @ w @ g0)
    segments = 1 << 17
    w_fine = nonabelian.holonomy(loop, (2, 3), segments=segments).matrix
    w_var = _gauge_transformed_holonomy(loop, (2, 3), sigma, g0, segments)
    err_var = linalg3.max_abs(w_var - g0.conj().T @ w_fine @ g0)

    checks = [
        _check("unitarity_4096_segments", worst_unitary, 1e-10),
        _check("constant_connection_vs_direct_exponential", worst_const, 1e-9),
        _check("refinement_ratio_segment_doubling", ratio, (2.5, 6.0), kind="range"),
        _check("gauge_covariance_constant_rotation", err_const, 1e-12),
        _check("gauge_covariance_loop_rotation", err_var, 1e-8),
    ]
    return _report("holonomy", seed, checks)


def _report(suite, seed, checks):
    return {
        "suite": suite,
        "seed": int(seed),
        "checks": checks,
        "passed": bool(all(c["passed"] for c in checks)),
    }


SUITES = {
    "algebra": algebra_suite,
    "purity": purity_suite,
    "adjoint": adjoint_suite,
    "stokes": stokes_suite,
    "holonomy": holonomy_suite,
}


def run_suites(suite, seed=0):
    """Run one named suite or 'all'; returns a list of suite reports."""
    if suite == "all":
        return [SUITES[name](seed=seed) for name in SUITES]
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)} or 'all'")
    return [SUITES[suite](seed=seed)]

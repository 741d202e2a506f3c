"""Builders that turn validated requests into result documents.

Every document embeds a sha256 digest of the canonical serialization of
the input it answers: the path spec for path commands, the full request
otherwise.  Execution knobs (sample counts, tolerances, parallelism) stay
out of the digest and are echoed as explicit fields instead, so documents
describing the same object are recognizable from the output alone.
Nothing here reads clocks or global state: repeated calls with equal
requests produce equal documents.
"""

import hashlib
import json
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .. import abelian, adiabatic, euler, gellmann, linalg3, nonabelian, paths, states
from .. import verify as verify_suites
from . import models


def canonical_json(payload):
    """Sorted keys, no whitespace, shortest round-trip float repr."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), allow_nan=False)


def request_digest(request):
    """Digest of the path spec when the request carries one, else the whole request."""
    payload = getattr(request, "spec", request)
    data = canonical_json(payload.model_dump(mode="json"))
    return hashlib.sha256(data.encode()).hexdigest()


def resolve_path(spec):
    """ParameterPath described by a validated spec file model."""
    inner = spec.path
    if inner.kind == "circle":
        return paths.coordinate_circle(
            inner.angle, center=inner.center.as_tuple(), winding=inner.winding
        )
    return paths.from_keyframes(inner.keyframes, ts=inner.ts, closed=inner.closed)


def matrix_payload(m):
    m = np.asarray(m, dtype=complex)
    return models.ComplexMatrix(re=m.real.tolist(), im=m.imag.tolist())


def vector_payload(v):
    v = np.asarray(v, dtype=complex)
    return models.ComplexVector(re=v.real.tolist(), im=v.imag.tolist())


def _check(name, value, bound):
    return models.Check(
        name=name, value=float(value), criterion=f"<= {bound:g}", passed=bool(value <= bound)
    )


def _status(checks, warnings=()):
    if any(not check.passed for check in checks):
        return "fail"
    if warnings:
        return "warning"
    return "ok"


def build_phase(request):
    path = resolve_path(request.spec)
    phase = abelian.geometric_phase(path, samples=request.samples)
    phase_fd = abelian.geometric_phase_fd(path, samples=request.samples, h=request.fd_step)
    delta = abs(phase - phase_fd)
    checks = [_check("closed_form_vs_finite_difference", delta, request.tol)]
    return models.PhaseResponse(
        status=_status(checks),
        spec_digest=request_digest(request),
        result_kind="loop_phase" if path.closed else "open_path_line_integral",
        closed=path.closed,
        n_legs=path.n_legs,
        samples=request.samples,
        fd_step=request.fd_step,
        phase=phase,
        phase_fd=phase_fd,
        delta=delta,
        checks=checks,
    )


def build_holonomy(request):
    path = resolve_path(request.spec)
    result = nonabelian.holonomy(path, request.levels, segments=request.segments)
    coarse = nonabelian.holonomy(path, request.levels, segments=max(64, request.segments // 2))
    w = result.matrix
    unitarity = linalg3.max_abs(w @ w.conj().T - np.eye(w.shape[0]))
    refinement = float(np.linalg.norm(w - coarse.matrix, 2))
    checks = [_check("unitarity_residual", unitarity, request.tol)]
    return models.HolonomyResponse(
        status=_status(checks),
        spec_digest=request_digest(request),
        levels=list(result.levels),
        e1=request.e1,
        e3=request.e3,
        segments=result.segments,
        matrix=matrix_payload(w),
        unitarity_error=unitarity,
        refinement_delta=refinement,
        checks=checks,
    )


def build_evolve(request):
    path = resolve_path(request.spec)
    levels = tuple(request.levels)
    nonabelian.require_common_energy(levels, request.e1, request.e3)
    prediction = nonabelian.holonomy(path, levels, segments=request.segments).matrix

    def run(total_time):
        sweep = adiabatic.Sweep(
            path=path, e1=request.e1, e3=request.e3, total_time=total_time
        )
        return sweep.resolved_steps(), adiabatic.extract_geometric(sweep, levels)

    if request.parallel and len(request.t_ladder) > 1:
        with ThreadPoolExecutor(max_workers=min(4, len(request.t_ladder))) as pool:
            results = list(pool.map(run, request.t_ladder))
    else:
        results = [run(t) for t in request.t_ladder]

    entries = []
    warnings = []
    for total_time, (steps, report) in zip(request.t_ladder, results):
        deviation = float(np.linalg.norm(report.geometric_part - prediction, 2))
        entries.append(
            models.EvolveEntry(
                total_time=total_time,
                steps=steps,
                dynamical_phase=report.dynamical_phase,
                overlap=matrix_payload(report.overlap),
                geometric_part=matrix_payload(report.geometric_part),
                deviation=deviation,
                residual=report.residual,
                norm_drift=report.norm_drift,
            )
        )
        if report.residual > request.tol:
            warnings.append(
                f"polar residual {report.residual:.3e} at T={total_time:g} exceeds "
                f"{request.tol:g}; the sweep was not adiabatic enough to trust the extraction"
            )
    checks = []
    return models.EvolveResponse(
        status=_status(checks, warnings),
        spec_digest=request_digest(request),
        levels=list(levels),
        e1=request.e1,
        e3=request.e3,
        segments=request.segments,
        prediction=matrix_payload(prediction),
        entries=entries,
        warnings=warnings,
        checks=checks,
    )


def build_density(request):
    angles = (request.alpha, request.beta, request.gamma, request.theta)
    n = states.bloch_vector(*angles)
    psi = states.pure_state(*angles)
    rho = np.outer(psi, psi.conj())
    route_error = max(
        linalg3.max_abs(rho - states.density_from_bloch(n)),
        linalg3.max_abs(rho - euler.coset_project(euler.coset_representative(*angles))),
    )
    norm_error = abs(float(n @ n) - 1.0)
    idempotency = float(np.max(np.abs(gellmann.star(n, n) - n)))
    checks = [
        _check("bloch_norm", norm_error, 1e-9),
        _check("star_idempotency", idempotency, 1e-9),
        _check("density_route_agreement", route_error, 1e-12),
    ]
    return models.DensityResponse(
        status=_status(checks),
        spec_digest=request_digest(request),
        angles=models.AngleQuadruple(
            alpha=request.alpha, beta=request.beta, gamma=request.gamma, theta=request.theta
        ),
        bloch=[float(x) for x in n],
        state=vector_payload(psi),
        density=matrix_payload(rho),
        norm_error=norm_error,
        idempotency_error=idempotency,
        route_error=route_error,
        pure=bool(states.is_pure(n)),
        checks=checks,
    )


def build_verify(request):
    reports = verify_suites.run_suites(request.suite, seed=request.seed)
    suites = [
        models.SuiteReport(
            suite=report["suite"],
            seed=report["seed"],
            checks=[models.Check(**check) for check in report["checks"]],
            passed=report["passed"],
        )
        for report in reports
    ]
    passed = all(suite.passed for suite in suites)
    return models.VerifyResponse(
        status="ok" if passed else "fail",
        spec_digest=request_digest(request),
        suite=request.suite,
        seed=request.seed,
        suites=suites,
        passed=passed,
    )

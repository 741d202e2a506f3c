"""Command line client for the service.

Each subcommand builds a request model, validates it locally, sends it to
the service (in process by default, over HTTP with --server) and writes
the returned document as canonical JSON or flattened CSV.  Exit status:
0 on success or warning, 1 when a reported check fails or the service
rejects the computation, 2 on spec file or usage errors.
"""

import csv
import io
import json
from pathlib import Path

import click
import pydantic

from . import __version__
from .errors import TriphaseError
from .service import documents, models

INVARIANT_EXIT = 1


def _format_validation(exc):
    parts = []
    for error in exc.errors():
        location = ".".join(str(piece) for piece in error["loc"]) or "<root>"
        parts.append(f"{location}: {error['msg']}")
    return "; ".join(parts)


def _load_spec(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise click.UsageError(f"cannot read spec file {path}: {exc}")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}")
    try:
        spec = models.PathSpecFile.model_validate(payload)
    except pydantic.ValidationError as exc:
        raise click.UsageError(f"{path}: {_format_validation(exc)}")
    try:
        documents.resolve_path(spec)
    except TriphaseError as exc:
        raise click.UsageError(f"{path}: {exc}")
    return spec


def _build_request(model, **fields):
    try:
        return model(**fields)
    except pydantic.ValidationError as exc:
        raise click.UsageError(_format_validation(exc))


def _post(server, endpoint, request):
    body = request.model_dump(mode="json")
    if server:
        import httpx

        response = httpx.post(server.rstrip("/") + endpoint, json=body, timeout=600.0)
    else:
        import warnings

        with warnings.catch_warnings():
            # the in-process client's import chain warns on some
            # starlette/httpx pairings; not actionable for users
            warnings.simplefilter("ignore")
            from fastapi.testclient import TestClient

        from .service.app import app

        with TestClient(app) as client:
            response = client.post(endpoint, json=body)
    if response.status_code != 200:
        try:
            detail = response.json().get("detail")
        except (ValueError, AttributeError):
            detail = response.text
        click.echo(f"request failed ({response.status_code}): {detail}", err=True)
        raise SystemExit(INVARIANT_EXIT)
    return response.json()


def _flatten(prefix, value, rows):
    if isinstance(value, dict):
        for key in sorted(value):
            _flatten(f"{prefix}.{key}" if prefix else key, value[key], rows)
    elif isinstance(value, list):
        for index, item in enumerate(value):
            _flatten(f"{prefix}.{index}" if prefix else str(index), item, rows)
    else:
        rows.append((prefix, value))


def _cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    return str(value)


def _render(document, fmt):
    if fmt == "json":
        return documents.canonical_json(document) + "\n"
    rows = []
    _flatten("", document, rows)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["field", "value"])
    for key, value in rows:
        writer.writerow([key, _cell(value)])
    return buffer.getvalue()


def _emit(document, fmt, out):
    text = _render(document, fmt)
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)
    if document.get("status") == "fail":
        raise SystemExit(INVARIANT_EXIT)


def _parse_levels(_ctx, _param, value):
    try:
        levels = [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter("levels must be comma separated integers")
    if not levels:
        raise click.BadParameter("at least one level is required")
    return levels


def _parse_ladder(_ctx, _param, value):
    try:
        ladder = [float(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter("t-ladder must be comma separated numbers")
    if not ladder:
        raise click.BadParameter("at least one ladder time is required")
    return ladder


def _output_options(command):
    decorators = [
        click.option(
            "--server",
            default=None,
            metavar="URL",
            help="send the request to a running service instead of computing in process",
        ),
        click.option(
            "--format",
            "fmt",
            type=click.Choice(["json", "csv"]),
            default="json",
            show_default=True,
            help="document rendering",
        ),
        click.option(
            "--out",
            type=click.Path(dir_okay=False, writable=True),
            default=None,
            help="write the document to this file instead of stdout",
        ),
    ]
    for decorator in decorators:
        command = decorator(command)
    return command


def _spec_option(command):
    return click.option(
        "--spec",
        "spec_path",
        required=True,
        type=click.Path(exists=True, dir_okay=False),
        help="JSON path spec file (units: radians)",
    )(command)


@click.group()
@click.version_option(version=__version__, prog_name="triphase")
def main():
    """Geometric phases and holonomies of three level systems."""


@main.command()
@click.option(
    "--suite",
    type=click.Choice(list(models.SUITE_NAMES) + ["all"]),
    default="all",
    show_default=True,
    help="which invariant suite to run",
)
@click.option("--seed", type=int, default=0, show_default=True)
@_output_options
def verify(suite, seed, server, fmt, out):
    """Run seeded invariant suites and report every check."""
    request = _build_request(models.VerifyRequest, suite=suite, seed=seed)
    _emit(_post(server, "/verify", request), fmt, out)


@main.command()
@_spec_option
@click.option("--samples", type=int, default=1024, show_default=True)
@click.option("--fd-step", type=float, default=1e-5, show_default=True)
@click.option("--tol", type=float, default=1e-9, show_default=True,
              help="allowed closed form vs finite difference delta")
@_output_options
def phase(spec_path, samples, fd_step, tol, server, fmt, out):
    """Geometric phase of a path with a finite difference cross check."""
    spec = _load_spec(spec_path)
    request = _build_request(
        models.PhaseRequest, spec=spec, samples=samples, fd_step=fd_step, tol=tol
    )
    _emit(_post(server, "/phase", request), fmt, out)


@main.command()
@_spec_option
@click.option("--levels", default="1", show_default=True, callback=_parse_levels,
              help="comma separated level set, e.g. 1 or 2,3")
@click.option("--e1", type=float, default=0.0, show_default=True)
@click.option("--e3", type=float, default=5.0, show_default=True)
@click.option("--segments", type=int, default=4096, show_default=True)
@click.option("--tol", type=float, default=1e-10, show_default=True,
              help="allowed unitarity residual")
@_output_options
def holonomy(spec_path, levels, e1, e3, segments, tol, server, fmt, out):
    """Wilson loop of the level-set connection around a closed path."""
    spec = _load_spec(spec_path)
    request = _build_request(
        models.HolonomyRequest,
        spec=spec, levels=levels, e1=e1, e3=e3, segments=segments, tol=tol,
    )
    _emit(_post(server, "/holonomy", request), fmt, out)


@main.command()
@_spec_option
@click.option("--levels", default="1", show_default=True, callback=_parse_levels,
              help="comma separated level set sharing one energy")
@click.option("--e1", type=float, default=0.0, show_default=True)
@click.option("--e3", type=float, default=5.0, show_default=True)
@click.option("--t-ladder", "t_ladder", default="50,100,200,400", show_default=True,
              callback=_parse_ladder, help="comma separated sweep durations")
@click.option("--segments", type=int, default=4096, show_default=True,
              help="segments for the holonomy prediction")
@click.option("--tol", type=float, default=0.1, show_default=True,
              help="polar residual warning threshold")
@click.option("--parallel/--no-parallel", default=False,
              help="propagate ladder entries concurrently")
@_output_options
def evolve(spec_path, levels, e1, e3, t_ladder, segments, tol, parallel, server, fmt, out):
    """Adiabatic sweeps over a time ladder against the holonomy prediction."""
    spec = _load_spec(spec_path)
    request = _build_request(
        models.EvolveRequest,
        spec=spec, levels=levels, e1=e1, e3=e3, t_ladder=t_ladder,
        segments=segments, tol=tol, parallel=parallel,
    )
    _emit(_post(server, "/evolve", request), fmt, out)


@main.command()
@click.option("--alpha", type=float, default=0.0, show_default=True)
@click.option("--beta", type=float, default=0.0, show_default=True)
@click.option("--gamma", type=float, default=0.0, show_default=True)
@click.option("--theta", type=float, default=0.0, show_default=True)
@_output_options
def density(alpha, beta, gamma, theta, server, fmt, out):
    """Bloch vector, state and density matrix at one point, with checks."""
    request = _build_request(
        models.DensityRequest, alpha=alpha, beta=beta, gamma=gamma, theta=theta
    )
    _emit(_post(server, "/density", request), fmt, out)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service with uvicorn."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()

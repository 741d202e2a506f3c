"""Request, response and path-spec schemas shared by service and client.

Path spec files are JSON documents with an explicit units field (always
"radians") and either a coordinate-circle family or an explicit keyframe
list.  Result documents carry a schema_version, the digest of the request
they answer, and a list of named tolerance checks; matrices travel as
separate real and imaginary arrays so no consumer needs complex literals.
"""

from typing import Annotated, Literal, Optional, Union

from pydantic import (
    AfterValidator,
    BaseModel,
    ConfigDict,
    Field,
    field_validator,
    model_validator,
)


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class AngleQuadruple(StrictModel):
    """The four coset angles in radians; omitted angles default to zero."""

    alpha: float = 0.0
    beta: float = 0.0
    gamma: float = 0.0
    theta: float = 0.0

    def as_tuple(self):
        return (self.alpha, self.beta, self.gamma, self.theta)


class CircleSpec(StrictModel):
    """One coordinate sweeps full turns while the other three stay fixed."""

    kind: Literal["circle"]
    angle: Literal["alpha", "beta", "gamma", "theta"]
    center: AngleQuadruple = Field(default_factory=AngleQuadruple)
    winding: int = 1

    @field_validator("winding")
    @classmethod
    def _nonzero(cls, value):
        if value == 0:
            raise ValueError("winding must be a nonzero integer")
        return value


class KeyframeSpec(StrictModel):
    """Piecewise-linear path through explicit angle quadruples."""

    kind: Literal["keyframes"]
    keyframes: list[list[float]] = Field(min_length=2)
    ts: Optional[list[float]] = None
    closed: bool = True

    @field_validator("keyframes")
    @classmethod
    def _rows_of_four(cls, value):
        for i, row in enumerate(value):
            if len(row) != 4:
                raise ValueError(
                    f"keyframes[{i}] must list alpha, beta, gamma, theta; got {len(row)} entries"
                )
        return value

    @model_validator(mode="after")
    def _ts_matches(self):
        if self.ts is not None and len(self.ts) != len(self.keyframes):
            raise ValueError("ts must have exactly one entry per keyframe")
        return self


PathSpec = Annotated[Union[CircleSpec, KeyframeSpec], Field(discriminator="kind")]


class PathSpecFile(StrictModel):
    """On-disk path description; angles are always radians."""

    units: Literal["radians"]
    path: PathSpec


def _sorted_levels(value):
    if not value:
        raise ValueError("at least one level is required")
    if len(set(value)) != len(value) or not set(value) <= {1, 2, 3}:
        raise ValueError("levels must be distinct integers from {1, 2, 3}")
    return sorted(value)


Levels = Annotated[list[int], AfterValidator(_sorted_levels)]


class PhaseRequest(StrictModel):
    spec: PathSpecFile
    samples: int = Field(default=1024, ge=16, le=1_000_000)
    fd_step: float = Field(default=1e-5, gt=0.0, le=1e-3)
    tol: float = Field(default=1e-9, gt=0.0)


class HolonomyRequest(StrictModel):
    spec: PathSpecFile
    levels: Levels = Field(default_factory=lambda: [1])
    e1: float = 0.0
    e3: float = 5.0
    segments: int = Field(default=4096, ge=64, le=1 << 22)
    tol: float = Field(default=1e-10, gt=0.0)


class EvolveRequest(StrictModel):
    spec: PathSpecFile
    levels: Levels = Field(default_factory=lambda: [1])
    e1: float = 0.0
    e3: float = 5.0
    t_ladder: list[float] = Field(
        default_factory=lambda: [50.0, 100.0, 200.0, 400.0], min_length=1
    )
    segments: int = Field(default=4096, ge=64, le=1 << 22)
    tol: float = Field(default=0.1, gt=0.0)
    parallel: bool = False

    @field_validator("t_ladder")
    @classmethod
    def _positive_times(cls, value):
        if any(t <= 0.0 for t in value):
            raise ValueError("every ladder time must be positive")
        return [float(t) for t in value]


class DensityRequest(StrictModel):
    alpha: float = 0.0
    beta: float = 0.0
    gamma: float = 0.0
    theta: float = 0.0


SUITE_NAMES = ("algebra", "purity", "adjoint", "stokes", "holonomy")


class VerifyRequest(StrictModel):
    suite: Literal["algebra", "purity", "adjoint", "stokes", "holonomy", "all"] = "all"
    seed: int = Field(default=0, ge=0)


class Check(StrictModel):
    name: str
    value: float
    criterion: str
    passed: bool


class ComplexMatrix(StrictModel):
    re: list[list[float]]
    im: list[list[float]]


class ComplexVector(StrictModel):
    re: list[float]
    im: list[float]


Status = Literal["ok", "warning", "fail"]


class PhaseResponse(StrictModel):
    schema_version: Literal["1"] = "1"
    command: Literal["phase"] = "phase"
    status: Status
    spec_digest: str
    result_kind: Literal["loop_phase", "open_path_line_integral"]
    closed: bool
    n_legs: int
    samples: int
    fd_step: float
    phase: float
    phase_fd: float
    delta: float
    checks: list[Check]


class HolonomyResponse(StrictModel):
    schema_version: Literal["1"] = "1"
    command: Literal["holonomy"] = "holonomy"
    status: Status
    spec_digest: str
    levels: list[int]
    e1: float
    e3: float
    segments: int
    matrix: ComplexMatrix
    unitarity_error: float
    refinement_delta: float
    checks: list[Check]


class EvolveEntry(StrictModel):
    total_time: float
    steps: int
    dynamical_phase: float
    overlap: ComplexMatrix
    geometric_part: ComplexMatrix
    deviation: float
    residual: float
    norm_drift: float


class EvolveResponse(StrictModel):
    schema_version: Literal["1"] = "1"
    command: Literal["evolve"] = "evolve"
    status: Status
    spec_digest: str
    levels: list[int]
    e1: float
    e3: float
    segments: int
    prediction: ComplexMatrix
    entries: list[EvolveEntry]
    warnings: list[str]
    checks: list[Check]


class DensityResponse(StrictModel):
    schema_version: Literal["1"] = "1"
    command: Literal["density"] = "density"
    status: Status
    spec_digest: str
    angles: AngleQuadruple
    bloch: list[float]
    state: ComplexVector
    density: ComplexMatrix
    norm_error: float
    idempotency_error: float
    route_error: float
    pure: bool
    checks: list[Check]


class SuiteReport(StrictModel):
    suite: str
    seed: int
    checks: list[Check]
    passed: bool


class VerifyResponse(StrictModel):
    schema_version: Literal["1"] = "1"
    command: Literal["verify"] = "verify"
    status: Status
    spec_digest: str
    suite: str
    seed: int
    suites: list[SuiteReport]
    passed: bool

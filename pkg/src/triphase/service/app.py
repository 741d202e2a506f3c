"""FastAPI application exposing the computations over HTTP.

Domain errors (bad paths, invalid level sets, undersampled sweeps) map to
422 with the error class name and message; schema violations are handled
by FastAPI's own validation layer.
"""

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import TriphaseError
from . import documents, models


def create_app():
    application = FastAPI(title="triphase", version=__version__)

    @application.exception_handler(TriphaseError)
    async def _domain_error(_request, exc):
        return JSONResponse(
            status_code=422,
            content={"detail": {"error": type(exc).__name__, "message": str(exc)}},
        )

    @application.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @application.post("/phase", response_model=models.PhaseResponse)
    def phase(request: models.PhaseRequest):
        return documents.build_phase(request)

    @application.post("/holonomy", response_model=models.HolonomyResponse)
    def holonomy(request: models.HolonomyRequest):
        return documents.build_holonomy(request)

    @application.post("/evolve", response_model=models.EvolveResponse)
    def evolve(request: models.EvolveRequest):
        return documents.build_evolve(request)

    @application.post("/density", response_model=models.DensityResponse)
    def density(request: models.DensityRequest):
        return documents.build_density(request)

    @application.post("/verify", response_model=models.VerifyResponse)
    def verify(request: models.VerifyRequest):
        return documents.build_verify(request)

    return application


app = create_app()

"""HTTP service wrapping the numeric core.

models defines the request, response and path-spec schemas; documents
turns validated requests into result documents; app assembles the
FastAPI application.  The command line client in triphase.cli talks to
this service, in process by default.
"""

from .app import app, create_app

__all__ = ["app", "create_app"]

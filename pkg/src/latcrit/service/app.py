"""FastAPI front end for the lattice toolkit."""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from ..core import LatticeError
from . import handlers
from . import schemas as s


def create_app() -> FastAPI:
    app = FastAPI(
        title="latcrit",
        description="Exact representation, duality, decomposition, and "
        "criterion-set verification for positive-definite integral lattices.",
        version="0.1.0",
    )

    @app.exception_handler(LatticeError)
    async def _lattice_error(_, exc: LatticeError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.post("/v1/info", response_model=s.InfoResponse)
    def info(req: s.InfoRequest):
        return handlers.info(req)

    @app.post("/v1/shortvec", response_model=s.ShortVecResponse)
    def shortvec(req: s.ShortVecRequest):
        return handlers.shortvec(req)

    @app.post("/v1/embed", response_model=s.EmbedResponse)
    def embed(req: s.EmbedRequest):
        return handlers.embed(req)

    @app.post("/v1/complement", response_model=s.ComplementResponse)
    def complement(req: s.ComplementRequest):
        return handlers.complement(req)

    @app.post("/v1/dual", response_model=s.DualResponse)
    def dual(req: s.DualRequest):
        return handlers.dual(req)

    @app.post("/v1/decompose", response_model=s.DecomposeResponse)
    def decompose(req: s.DecomposeRequest):
        return handlers.decompose(req)

    @app.post("/v1/enumerate", response_model=s.EnumerateResponse)
    def enumerate_space(req: s.EnumerateRequest):
        return handlers.enumerate_space(req)

    @app.post("/v1/check-criterion", response_model=s.CriterionResponse)
    def check_criterion(req: s.CheckCriterionRequest):
        return handlers.criterion(req)

    @app.post("/v1/check-minimality", response_model=s.MinimalityResponse)
    def check_minimality(req: s.CheckMinimalityRequest):
        return handlers.minimality(req)

    @app.post("/v1/check-prop2", response_model=s.Prop2Response)
    def check_prop2(req: s.CheckProp2Request):
        return handlers.prop2(req)

    @app.post("/v1/check-prop3", response_model=s.Prop3Response)
    def check_prop3(req: s.CheckProp3Request):
        return handlers.prop3(req)

    @app.post("/v1/verify-paper", response_model=s.VerifyResponse)
    def verify_paper(req: s.VerifyRequest):
        return handlers.verify(req)

    return app


app = create_app()

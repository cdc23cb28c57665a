"""HTTP front end over the same payload builders the CLI uses.

Run with: uvicorn kzq.service.app:app

Domain errors map to HTTP 400 with the error class name and the exit
code the CLI would have used, so scripted clients can treat both front
ends the same way.
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..cli import (amalgam_payload, exit_code_for, invariants_payload,
                   vc1_payload)
from ..corpus import acceptance_report
from ..errors import KzqError
from .models import (AmalgamRequest, AmalgamResponse, CorpusRequest,
                     CorpusResponse, CriterionRow, ErrorBody,
                     InvariantsRequest, InvariantsResponse, Vc1Request,
                     Vc1Response)

_ERROR_RESPONSES = {400: {"model": ErrorBody}}


def create_app():
    app = FastAPI(
        title="kzq",
        version="0.1.0",
        description="Lower K-theory invariants of finite group rings, "
                    "computed exactly.")

    @app.exception_handler(KzqError)
    async def _domain_error(request: Request, exc: KzqError):
        return JSONResponse(status_code=400, content={
            "error": type(exc).__name__,
            "message": str(exc),
            "exit_code": exit_code_for(exc),
        })

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/v1/invariants", response_model=InvariantsResponse,
              responses=_ERROR_RESPONSES)
    def invariants(req: InvariantsRequest):
        return InvariantsResponse.model_validate(
            invariants_payload(req.group, req.schur_data, req.seed))

    @app.post("/v1/amalgam", response_model=AmalgamResponse,
              responses=_ERROR_RESPONSES)
    def amalgam(req: AmalgamRequest):
        return AmalgamResponse.model_validate(
            amalgam_payload(req.h, req.k1, req.embed1, req.k2, req.embed2,
                            req.schur_data, req.seed))

    @app.post("/v1/vc1", response_model=Vc1Response,
              responses=_ERROR_RESPONSES)
    def vc1(req: Vc1Request):
        return Vc1Response.model_validate(
            vc1_payload(req.h, req.aut, req.schur_data, req.seed))

    @app.post("/v1/corpus", response_model=CorpusResponse)
    def corpus(req: CorpusRequest):
        rows = acceptance_report(req.schur_data, req.seed)
        counts = {"PASS": 0, "SKIP": 0, "FAIL": 0}
        for r in rows:
            counts[r["status"]] += 1
        return CorpusResponse(
            results=[CriterionRow(**r) for r in rows],
            passed=counts["PASS"], skipped=counts["SKIP"],
            failed=counts["FAIL"], ok=counts["FAIL"] == 0)

    return app


app = create_app()

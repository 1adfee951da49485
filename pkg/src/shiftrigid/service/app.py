"""FastAPI service over the operation layer.

Run with ``uvicorn shiftrigid.service:app``.  All endpoints are POST with a
JSON body and mirror the command line subcommands; `/check` takes the same
representation files the CLI reads.
"""

from __future__ import annotations

from fastapi import Body, FastAPI, Request
from fastapi.responses import JSONResponse

from shiftrigid import __version__
from shiftrigid.alpha import FiberAnomaly
from shiftrigid.homext import DiscreteInterval
from shiftrigid.ops import op_check, op_count, op_enumerate, op_enumerate_alpha, op_ext, op_verify
from shiftrigid.service import schemas

app = FastAPI(
    title="shiftrigid",
    version=__version__,
    description="Rigidity and exact counts for interval representations with a shift.",
)


@app.exception_handler(ValueError)
async def value_error_handler(_: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(FiberAnomaly)
async def fiber_anomaly_handler(_: Request, exc: FiberAnomaly) -> JSONResponse:
    return JSONResponse(status_code=500, content={"detail": str(exc)})


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/count", response_model=schemas.CountResponse)
def count(req: schemas.CountRequest) -> dict:
    return op_count(req.period)


@app.post("/enumerate", response_model=schemas.EnumerateResponse)
def enumerate_sets(req: schemas.EnumerateRequest) -> dict:
    return op_enumerate(req.period)


@app.post("/enumerate-alpha", response_model=schemas.EnumerateAlphaResponse)
def enumerate_alpha_classes(req: schemas.EnumerateAlphaRequest) -> dict:
    return op_enumerate_alpha(req.n)


@app.post("/ext", response_model=schemas.ExtResponse)
def ext(req: schemas.ExtRequest) -> dict:
    window = (req.window.lo, req.window.hi) if req.window else None
    return op_ext(DiscreteInterval(req.i.lo, req.i.hi), DiscreteInterval(req.j.lo, req.j.hi), window)


@app.post("/check", response_model=schemas.CheckResponse)
def check(payload: dict = Body(...)) -> dict:
    return op_check(payload)


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify(req: schemas.VerifyRequest) -> dict:
    return op_verify(req.n_min, req.n_max)

"""FastAPI application exposing the computations over HTTP."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, StreamingResponse

from .. import __version__
from . import handlers
from .schemas import (
    AlexanderRequest,
    AlexanderResponse,
    CheckRequest,
    CheckResponse,
    CoeffsRequest,
    CoeffsResponse,
    ScanRequest,
    SignatureRequest,
    SignatureResponse,
)

app = FastAPI(
    title="braidpoly",
    version=__version__,
    description=(
        "Exact Alexander polynomials of closed braids, signatures of "
        "alternating block braids, and trapezoidal-shape checks."
    ),
)


@app.exception_handler(ValueError)
async def _user_error(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(ArithmeticError)
async def _internal_defect(request: Request, exc: ArithmeticError) -> JSONResponse:
    return JSONResponse(
        status_code=500, content={"detail": f"internal defect: {exc}"}
    )


@app.get("/")
async def root() -> dict:
    return {"name": "braidpoly", "version": __version__}


@app.post("/alexander", response_model=AlexanderResponse)
async def alexander_endpoint(req: AlexanderRequest) -> AlexanderResponse:
    return handlers.compute_alexander(req)


@app.post("/signature", response_model=SignatureResponse)
async def signature_endpoint(req: SignatureRequest) -> SignatureResponse:
    return handlers.compute_signature(req)


@app.post("/check", response_model=CheckResponse)
async def check_endpoint(req: CheckRequest) -> CheckResponse:
    return handlers.run_check(req)


@app.post("/coeffs", response_model=CoeffsResponse)
async def coeffs_endpoint(req: CoeffsRequest) -> CoeffsResponse:
    return handlers.compute_coeffs(req)


@app.post("/scan")
async def scan_endpoint(req: ScanRequest) -> StreamingResponse:
    return StreamingResponse(handlers.iter_scan_csv(req), media_type="text/csv")

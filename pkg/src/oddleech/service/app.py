"""FastAPI service wrapping the core library.

Endpoints mirror the CLI subcommands; responses carry the same JSON shapes
(certificates use the version-1 schema with big integers as decimal
strings).  Run with: uvicorn oddleech.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import JSONResponse

from .. import analysis, construction, frames, qseries
from ..codes import code_c4, code_c11, code_d4, is_self_dual
from .models import (
    AnalyzeResponse,
    FrameBuildRequest,
    IdentityResponse,
    RepresentResponse,
    ThetaResponse,
    VerifyRequest,
    VerifyResponse,
)

_CODES = {"C4": code_c4, "D4": code_d4, "C11": code_c11}

app = FastAPI(
    title="oddleech",
    description="Orthogonal frames in the odd Leech lattice, exact certificates.",
    version="0.1.0",
)


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/frame/build")
def frame_build(request: FrameBuildRequest) -> JSONResponse:
    cert = frames.build_frame(request.k)
    return JSONResponse(frames.certificate_to_dict(cert))


@app.post("/frame/verify", response_model=VerifyResponse)
def frame_verify(request: VerifyRequest) -> VerifyResponse:
    model = request.certificate
    cert = frames.FrameCertificate(
        k=model.k,
        ambient=model.ambient.code,
        vectors=model.vectors,
        provenance=model.provenance,
    )
    if model.ambient.modulus != frames._AMBIENT_SCALE[model.ambient.code] or (
        model.ambient.scale != frames._AMBIENT_SCALE[model.ambient.code]
    ):
        raise HTTPException(
            status_code=422, detail="ambient modulus/scale do not match the named code"
        )
    report = frames.frame_check_report(cert)
    return VerifyResponse(
        valid=report["gram_ok"] and report["membership_ok"],
        gram_ok=report["gram_ok"],
        membership_ok=report["membership_ok"],
        k=cert.k,
    )


@app.get("/lattice/analyze", response_model=AnalyzeResponse)
def lattice_analyze(
    code: str = Query(...), bound: int = Query(default=4, ge=1, le=8)
) -> AnalyzeResponse:
    builder = _CODES.get(code)
    if builder is None:
        raise HTTPException(status_code=422, detail=f"unknown code id {code!r}")
    zk = builder()
    lattice = construction.construction_a(zk, code_id=code)
    unimodular = analysis.is_unimodular(lattice)
    counts = analysis.short_vectors(lattice, bound).counts_by_norm
    return AnalyzeResponse(
        code=code,
        selfDual=is_self_dual(zk),
        unimodular=unimodular,
        even=analysis.is_even(lattice) if unimodular else None,
        minNorm=min(counts) if counts else None,
        countsByNorm={str(n): c for n, c in sorted(counts.items())},
        bound=bound,
    )


@app.get("/qseries/identity", response_model=IdentityResponse)
def qseries_identity(
    bound: int = Query(default=qseries.DEFAULT_IDENTITY_BOUND, ge=1, le=5000)
) -> IdentityResponse:
    holds, first = qseries.identity_check(bound)
    return IdentityResponse(holds=holds, bound=bound, firstMismatch=first)


@app.get("/represent", response_model=RepresentResponse)
def represent(k: int = Query(..., ge=1)) -> RepresentResponse:
    rep = frames.represent_quaternary(k)
    return RepresentResponse(
        k=k,
        representation=list(rep.as_tuple()) if rep else None,
        value=rep.value if rep else None,
    )


@app.get("/theta", response_model=ThetaResponse)
def theta(code: str = Query(...), n: int = Query(..., ge=0, le=16)) -> ThetaResponse:
    builder = _CODES.get(code)
    if builder is None:
        raise HTTPException(status_code=422, detail=f"unknown code id {code!r}")
    lattice = construction.construction_a(builder(), code_id=code)
    return ThetaResponse(
        code=code, n=n, coefficients=analysis.theta_coeffs(lattice, n)
    )

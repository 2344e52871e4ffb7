"""
Handlers mapping request models to response models. Both the HTTP endpoints
and the CLI go through these, so the two front ends cannot drift apart.
"""

from __future__ import annotations

from typing import Iterator

from ..braid import BlockBraid, BraidWord
from ..burau import alexander
from ..conjecture import check_conjecture, leading_coeffs, scan_csv_lines
from ..laurent import LaurentPoly
from ..signature import seifert_oracle, signature_closed_form
from .schemas import (
    AlexanderRequest,
    AlexanderResponse,
    CheckRequest,
    CheckResponse,
    CoeffsRequest,
    CoeffsResponse,
    PolyModel,
    ScanRequest,
    SignatureRequest,
    SignatureResponse,
)


def _poly_model(p: LaurentPoly) -> PolyModel:
    return PolyModel(offset=p.offset, coeffs=list(p.coeffs))


def _block_braid(strands: int, blocks: str | list[list[int]], sign: str) -> BlockBraid:
    value = 1 if sign == "+" else -1
    if isinstance(blocks, str):
        return BlockBraid.parse(strands, blocks, value)
    return BlockBraid(strands, blocks, value)


def compute_alexander(req: AlexanderRequest) -> AlexanderResponse:
    word = BraidWord.parse(req.word, req.strands)
    result = alexander(word)
    return AlexanderResponse(
        poly_t=_poly_model(result.poly_t),
        poly_s=_poly_model(result.poly_s),
        degree=result.degree,
        is_zero=result.is_zero,
        alternating_in_t=result.alternating_in_t,
    )


def compute_signature(req: SignatureRequest) -> SignatureResponse:
    braid = _block_braid(req.strands, req.blocks, req.sign)
    report = seifert_oracle(braid) if req.oracle else signature_closed_form(braid)
    return SignatureResponse(value=report.value, method=report.method, case=report.case)


def run_check(req: CheckRequest) -> CheckResponse:
    braid = _block_braid(req.strands, req.blocks, req.sign)
    report = check_conjecture(braid)
    shape = report.shape
    return CheckResponse(
        strands=braid.strands,
        sign="+" if braid.sign > 0 else "-",
        parameters=[list(row) for row in braid.magnitudes],
        components=report.components,
        is_knot=report.is_knot,
        sigma=report.sigma,
        is_zero=report.alexander.is_zero,
        degree=report.alexander.degree,
        poly_s=_poly_model(report.alexander.poly_s),
        is_symmetric=shape.is_symmetric if shape else None,
        is_trapezoidal=shape.is_trapezoidal if shape else None,
        all_positive=shape.all_positive if shape else None,
        center=str(shape.center) if shape else None,
        stable_length=shape.stable_length if shape else None,
        is_log_concave=shape.is_log_concave if shape else None,
        bound_holds=shape.bound_holds if shape else None,
    )


def compute_coeffs(req: CoeffsRequest) -> CoeffsResponse:
    result = leading_coeffs(req.strands, req.blocks, req.min_entry)
    return CoeffsResponse(
        a0=result.a0,
        a1=result.a1,
        a2=result.a2,
        a3=result.a3,
        thresholds_met=list(result.thresholds_met),
    )


def iter_scan_csv(req: ScanRequest) -> Iterator[str]:
    return scan_csv_lines(
        req.strands,
        range(req.m_min, req.m_max + 1),
        req.max_entry,
        1 if req.sign == "+" else -1,
    )

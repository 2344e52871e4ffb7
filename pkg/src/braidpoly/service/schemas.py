"""Pydantic request/response models for the service endpoints."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, model_validator


class PolyModel(BaseModel):
    """Canonical Laurent polynomial: lowest exponent plus dense coefficients."""

    offset: int
    coeffs: list[int]


class AlexanderRequest(BaseModel):
    word: str = Field(description="Braid word, e.g. 's1^3 s2^-2 s3^5'")
    strands: int = Field(ge=2)


class AlexanderResponse(BaseModel):
    poly_t: PolyModel
    poly_s: PolyModel
    degree: int
    is_zero: bool
    alternating_in_t: bool


class SignatureRequest(BaseModel):
    strands: int = Field(ge=2)
    blocks: str | list[list[int]] = Field(
        description="Block magnitudes, e.g. '3,2,5;1,1,2' or [[3,2,5],[1,1,2]]"
    )
    sign: Literal["+", "-"] = "+"
    oracle: bool = Field(
        default=False,
        description="Use the Seifert-matrix inertia oracle (single block only)",
    )


class SignatureResponse(BaseModel):
    value: int
    method: Literal["closed_form", "seifert_oracle"]
    case: Literal["n_odd", "n_even_positive", "n_even_negative"]


class CheckRequest(BaseModel):
    strands: int = Field(ge=2)
    blocks: str | list[list[int]]
    sign: Literal["+", "-"] = "+"


class CheckResponse(BaseModel):
    strands: int
    sign: Literal["+", "-"]
    parameters: list[list[int]]
    components: int
    is_knot: bool
    sigma: int
    is_zero: bool
    degree: int
    poly_s: PolyModel
    is_symmetric: bool | None
    is_trapezoidal: bool | None
    all_positive: bool | None
    center: str | None
    stable_length: int | None
    is_log_concave: bool | None
    bound_holds: bool | None


class CoeffsRequest(BaseModel):
    strands: int = Field(ge=3)
    blocks: int = Field(ge=1)
    min_entry: int | None = Field(
        default=None,
        ge=1,
        description="Smallest block entry; masks coefficients whose threshold fails",
    )


class CoeffsResponse(BaseModel):
    a0: int | None
    a1: int | None
    a2: int | None
    a3: int | None
    thresholds_met: list[bool]


class ScanRequest(BaseModel):
    strands: int = Field(default=4, ge=2)
    m_min: int = Field(default=1, ge=1)
    m_max: int = Field(ge=1)
    max_entry: int = Field(ge=1)
    sign: Literal["+", "-"] = "+"

    @model_validator(mode="after")
    def _ordered(self) -> ScanRequest:
        if self.m_max < self.m_min:
            raise ValueError("m_max must be >= m_min")
        return self

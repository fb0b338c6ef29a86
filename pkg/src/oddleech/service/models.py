"""Pydantic request/response models for the HTTP service.

Vector entries may arrive as integers or decimal strings (the JSON schema
serializes values beyond 53 bits as strings); validators normalize both to
Python ints.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator


class AmbientModel(BaseModel):
    code: Literal["D4", "C11"]
    modulus: int
    scale: int


class ChecksModel(BaseModel):
    gram_ok: bool
    membership_ok: bool


class CertificateModel(BaseModel):
    version: Literal[1]
    k: int
    ambient: AmbientModel
    vectors: list[list[int]]
    provenance: list[dict] = Field(default_factory=list)
    checks: Optional[ChecksModel] = None

    @field_validator("k", mode="before")
    @classmethod
    def _k_from_string(cls, v):
        return int(v) if isinstance(v, str) else v

    @field_validator("vectors", mode="before")
    @classmethod
    def _entries_from_strings(cls, v):
        if isinstance(v, list):
            return [
                [int(x) if isinstance(x, str) else x for x in row]
                if isinstance(row, list)
                else row
                for row in v
            ]
        return v


class FrameBuildRequest(BaseModel):
    k: int = Field(ge=3, description="frame norm; the lattice has minimum norm 3")


class VerifyRequest(BaseModel):
    certificate: CertificateModel


class VerifyResponse(BaseModel):
    valid: bool
    gram_ok: bool
    membership_ok: bool
    k: int


class AnalyzeResponse(BaseModel):
    code: str
    selfDual: bool
    unimodular: bool
    even: Optional[bool]
    minNorm: Optional[int]
    countsByNorm: dict[str, int]
    bound: int


class IdentityResponse(BaseModel):
    holds: bool
    bound: int
    firstMismatch: Optional[int]


class RepresentResponse(BaseModel):
    k: int
    representation: Optional[list[int]]
    value: Optional[int]


class ThetaResponse(BaseModel):
    code: str
    n: int
    coefficients: list[int]

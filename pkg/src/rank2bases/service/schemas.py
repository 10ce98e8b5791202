"""Pydantic request/response models for the HTTP service.

Polynomials travel as both a canonical text form and a list of
[m1, m2, coeff-as-decimal-string] triples (coefficients can exceed any
fixed-width integer, hence strings).
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class ParamsMixin(BaseModel):
    b: int = Field(ge=1)
    c: int = Field(ge=1)


class PolyPayload(BaseModel):
    text: str
    terms: list[list]


class ClusterRequest(ParamsMixin):
    k: int


class ClusterResponse(BaseModel):
    k: int
    poly: PolyPayload


class GreedyRequest(ParamsMixin):
    a1: int
    a2: int
    table: bool = False


class GreedyResponse(BaseModel):
    a1: int
    a2: int
    poly: PolyPayload
    region_case: int
    region_imaginary: bool
    coeffs: dict[str, str] | None = None


class ScatterRequest(ParamsMixin):
    order: int = Field(ge=1, le=200)
    dvec: bool = False


class WallPayload(BaseModel):
    dir: list[int]
    geom: str
    coeffs: dict[str, int]


class DiagramPayload(BaseModel):
    b: int
    c: int
    variant: str
    order: int
    walls: list[WallPayload]


class ThetaRequest(ParamsMixin):
    m: list[int]
    order: int | None = Field(default=None, ge=0, le=200)
    dvec: bool = False
    q: list[str] | None = None
    lines: bool = False


class ThetaResponse(BaseModel):
    poly: PolyPayload
    order_used: int
    endpoint: list[str]
    line_count: int
    lines: list[list[dict]] | None = None


class CompareRequest(ParamsMixin):
    a1: int
    a2: int


class CompareReportPayload(BaseModel):
    b: int
    c: int
    a1: int
    a2: int
    order_used: int
    greedy: list[list]
    theta: list[list]
    equal: bool
    support_certified: bool
    elapsed_s: float
    support_diff: list[list]


class CompareGridRequest(ParamsMixin):
    radius: int = Field(ge=0, le=8)
    max_budget: int = Field(default=40, ge=1)


class CompareGridResponse(BaseModel):
    all_equal: bool
    count: int
    reports: list[CompareReportPayload]


class RenderRequest(ParamsMixin):
    order: int = Field(ge=1, le=200)
    dvec: bool = False
    theta_m: list[int] | None = None
    extent: float = 4.0
    size: int = 480

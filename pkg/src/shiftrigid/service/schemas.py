"""Request and response shapes for the HTTP service.

Enumeration sizes grow fast, so the request models cap the parameters at
desk scale: lattice periods up to 12, grid counts up to 3.  The caps are
resource limits of this service, not limits of the library.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

MAX_PERIOD = 12
MAX_GRID_POINTS = 3


class CountRequest(BaseModel):
    period: int = Field(ge=1, le=MAX_PERIOD)


class CountResponse(BaseModel):
    m: int
    count: int
    formula: int


class FinOrbitModel(BaseModel):
    kind: Literal["fin"]
    a: int
    len: int = Field(ge=1)


class LeftRayModel(BaseModel):
    kind: Literal["lray"]
    d: int


class RightRayModel(BaseModel):
    kind: Literal["rray"]
    c: int


LatticeOrbitModel = FinOrbitModel | LeftRayModel | RightRayModel


class OrbitSetModel(BaseModel):
    m: int
    orbits: list[LatticeOrbitModel]


class EnumerateRequest(BaseModel):
    period: int = Field(ge=1, le=MAX_PERIOD)


class EnumerateResponse(BaseModel):
    m: int
    count: int
    sets: list[OrbitSetModel]


class GridOrbitModel(BaseModel):
    lo: int | Literal["ninf"]
    lo_closed: bool = False
    hi: int | Literal["pinf"]
    hi_closed: bool = False


class FamilyModel(BaseModel):
    gap: int
    dir: Literal["left", "right"]
    far: int | str
    far_closed: bool = False


class AlphaRepModel(BaseModel):
    n: int
    orbits: list[GridOrbitModel]
    families: list[FamilyModel]


class EnumerateAlphaRequest(BaseModel):
    n: int = Field(ge=1, le=MAX_GRID_POINTS)


class EnumerateAlphaResponse(BaseModel):
    n: int
    count: int
    formula: int
    classes: list[AlphaRepModel]


class IntervalModel(BaseModel):
    lo: int | None = None
    hi: int | None = None


class WindowModel(BaseModel):
    lo: int
    hi: int


class ExtRequest(BaseModel):
    i: IntervalModel
    j: IntervalModel
    window: WindowModel | None = None


class ExtWindowResult(BaseModel):
    lo: int
    hi: int
    hom: int
    ext: int


class ExtResponse(BaseModel):
    ext: int
    window: ExtWindowResult | None = None
    agrees: bool | None = None


class CheckResponse(BaseModel):
    kind: str
    valid: bool
    violations: list[str]
    rigid: bool | None = None
    witness: str | None = None


class VerifyRequest(BaseModel):
    n_min: int = Field(ge=1, le=MAX_GRID_POINTS)
    n_max: int = Field(ge=1, le=MAX_GRID_POINTS)


class VerifyRow(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    n: int
    formula: int
    enumerated: int
    passed: bool = Field(alias="pass")
    error: str | None = None


class VerifyResponse(BaseModel):
    rows: list[VerifyRow]
    ok: bool

"""Request and response models for the lattice service.

Lattice-valued fields are strings: either an expression ("E8 + Zn(1)",
"diag(1,1,2)") or, when they contain a newline, the Gram text format
(rank line followed by matrix rows, '#' comments allowed).
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class InfoRequest(BaseModel):
    lattice: str


class InfoResponse(BaseModel):
    rank: int
    det: int
    min_norm: int
    min_dual_norm: str
    unimodular: bool
    gram: str


class ShortVecRequest(BaseModel):
    lattice: str
    bound: str = "1"


class ShortVecEntry(BaseModel):
    coords: list[int]
    norm: int


class ShortVecResponse(BaseModel):
    bound: str
    count: int
    count_both_signs: int
    vectors: list[ShortVecEntry]


class EmbedRequest(BaseModel):
    target: str
    source: str


class EmbedResponse(BaseModel):
    found: bool
    matrix: Optional[list[list[int]]] = None


class ComplementRequest(BaseModel):
    lattice: str
    vectors: list[list[int]] = Field(description="sublattice basis vectors, one per row")


class ComplementResponse(BaseModel):
    gram: str
    rank: int
    det: int


class DualRequest(BaseModel):
    lattice: str


class DualResponse(BaseModel):
    entries: list[list[str]]
    integral: bool


class DecomposeRequest(BaseModel):
    lattice: str


class SummandEntry(BaseModel):
    gram: str
    rank: int
    det: int
    embedding: list[list[int]]


class DecomposeResponse(BaseModel):
    indecomposable: bool
    summands: list[SummandEntry]


class SpaceModel(BaseModel):
    rank: int
    max_diag: int
    max_det: Optional[int] = None


class EnumerateRequest(SpaceModel):
    count_only: bool = False


class EnumerateResponse(BaseModel):
    count: int
    grams: list[str]


class CheckCriterionRequest(BaseModel):
    base: str
    members: list[str]
    space: SpaceModel
    shards: int = 1
    shard: int = 0


class CounterexampleModel(BaseModel):
    gram: str
    missing: str
    certificates: list[list[list[int]]]


class CriterionResponse(BaseModel):
    verdict: str
    space: SpaceModel
    classes_checked: int
    counterexample: Optional[CounterexampleModel] = None


class CheckMinimalityRequest(BaseModel):
    base: str
    members: list[str]
    witnesses: list[str] = []
    space: SpaceModel


class MinimalityEntryModel(BaseModel):
    dropped: str
    witness: Optional[str] = None
    witness_origin: Optional[str] = None


class MinimalityResponse(BaseModel):
    all_witnessed: bool
    entries: list[MinimalityEntryModel]


class CheckProp2Request(BaseModel):
    l: str
    l_prime: str


class Prop2Response(BaseModel):
    holds: bool
    dual_min: str
    generating_bound: int


class CheckProp3Request(BaseModel):
    ground: list[str]
    parts: list[list[int]]


class Prop3Response(BaseModel):
    passed: bool
    unimodular_ok: bool
    coprime_ok: bool
    union_ok: bool
    minimality_ok: bool
    redundant_parts: list[int]
    criterion_set: list[str]


class VerifyRequest(BaseModel):
    slow: bool = False


class CheckResultModel(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    passed: bool
    results: list[CheckResultModel]

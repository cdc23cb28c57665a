"""Request and response bodies for the HTTP service.

Responses mirror the CLI JSON payloads field for field, including the
"schema" version key, so the two front ends stay interchangeable.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


class GroupIso(BaseModel):
    """A finitely generated abelian group in Smith canonical form."""

    rank: int
    torsion: List[int]


class _Report(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(alias="schema")
    seed: int
    schur_data: List[str]
    group: str
    agreement: bool


class InvariantsRequest(BaseModel):
    group: str = Field(description='group spec, e.g. "name:Q16"')
    seed: int = 0
    schur_data: Optional[List[str]] = Field(
        default=None,
        description="server-side schur data paths; bundled files by default")


class InvariantsResponse(_Report):
    input: str
    r_q: int
    r_qp: Dict[str, int]
    r_fp: Dict[str, int]
    carter_rank: int
    s: int
    k_minus_1: GroupIso
    sc_rank: int
    image: Optional[GroupIso] = None


class AmalgamRequest(BaseModel):
    h: str = Field(description="edge group spec")
    k1: str
    embed1: str = Field(description='generator map H -> K1, e.g. "r=a^2;s=a*b"')
    k2: str
    embed2: str
    seed: int = 0
    schur_data: Optional[List[str]] = None


class AmalgamInput(BaseModel):
    h: str
    k1: str
    embed1: str
    k2: str
    embed2: str


class AmalgamResponse(_Report):
    input: AmalgamInput
    ker_k0q: GroupIso
    ker_sc: GroupIso
    ker_k_minus_1: GroupIso
    image: GroupIso


class Vc1Request(BaseModel):
    h: str = Field(description="finite group spec")
    aut: str = Field(default="", description="automorphism as a generator "
                                             "map; empty for the identity")
    seed: int = 0
    schur_data: Optional[List[str]] = None


class Vc1Input(BaseModel):
    h: str
    aut: str


class Vc1Response(_Report):
    input: Vc1Input
    k0q: GroupIso
    image: GroupIso
    note: str


class CorpusRequest(BaseModel):
    seed: int = 0
    schur_data: Optional[List[str]] = None


class CriterionRow(BaseModel):
    criterion: int
    label: str
    status: str
    detail: str


class CorpusResponse(BaseModel):
    results: List[CriterionRow]
    passed: int
    skipped: int
    failed: int
    ok: bool


class ErrorBody(BaseModel):
    error: str
    message: str
    exit_code: int

"""Request/response models for the HTTP service.

Requests carry program text and a semiring selector.  Table-defined semirings
are inlined as file content (the server never reads client-side paths).
"""

from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, Field


class SemiringSelector(BaseModel):
    semiring: str = Field(description="registry name, e.g. bool, opt, powerset:a,b")
    table: Optional[str] = Field(
        default=None, description="inline table-semiring file content (with semiring=table:<label>)"
    )


class ParseRequest(SemiringSelector):
    program: str
    dedup: bool = False


class ParseResponse(BaseModel):
    canonical: str
    atoms: List[str]
    clause_count: int
    is_positive: bool
    semiring: str


class EvalRequest(SemiringSelector):
    program: str
    semantics: str = Field(default="lfp", description="lfp | kk | wf")
    approximator: str = Field(default="fitting", description="fitting | ultimate")
    max_iterations: int = 10_000
    dedup: bool = False
    unsafe_fitting: bool = False
    trace: bool = False


class EvalResponse(BaseModel):
    result: dict
    table: str
    plain: str


class ModelsRequest(SemiringSelector):
    program: str
    mode: str = Field(default="enumerate", description="enumerate | check")
    pair: Optional[str] = Field(
        default=None, description="two-section [lower]/[upper] pair text, required for mode=check"
    )
    approximator: str = "fitting"
    max_iterations: int = 10_000
    dedup: bool = False
    unsafe_fitting: bool = False


class ModelsResponse(BaseModel):
    result: dict
    table: str


class CheckSemiringRequest(SemiringSelector):
    checks: Optional[List[str]] = Field(
        default=None, description="subset of the known property checks; all when omitted"
    )


class CheckSemiringResponse(BaseModel):
    semiring: str
    axiom_violations: List[str]
    reports: List[dict]


class SemiringsResponse(BaseModel):
    semirings: List[str]
    checks: List[str]


class ErrorBody(BaseModel):
    code: str
    message: str

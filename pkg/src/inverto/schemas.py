"""Request and response shapes for the HTTP service.

Every operation responds with the same envelope: op, echoed input, result,
and an optional witness.  Keys keep this declaration order so serialized
output is diff-friendly.
"""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel


class GenRequest(BaseModel):
    family: str
    params: list[int] = []
    order: Optional[int] = None


class IndexRequest(BaseModel):
    code: str
    method: str = "state-bfs"
    allow_large: bool = False


class OrderRequest(BaseModel):
    n: int
    allow_large: bool = False


class DistanceRequest(BaseModel):
    code_t: str
    code_u: str


class CodeRequest(BaseModel):
    code: str


class InvertRequest(BaseModel):
    code: str
    sets: list[list[int]]


class MemberRequest(BaseModel):
    code: str
    m: int
    mode: str = "index"


class ObstructionsRequest(BaseModel):
    m: int
    max_n: int
    allow_large: bool = False


class UniversalRequest(BaseModel):
    m: int
    k: int = 5
    sample_text: Optional[str] = None
    default_count: Optional[int] = None


class EmbedRequest(BaseModel):
    pattern: str
    host: str


class CountRequest(BaseModel):
    n: int
    threshold: int
    allow_large: bool = False


class OpResponse(BaseModel):
    op: str
    input: dict
    result: Any = None
    witness: Any = None

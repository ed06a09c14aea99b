"""HTTP facade over the engine: one POST endpoint per operation.

The service is stateless; the expensive per-order BFS and catalog tables
are cached in-process, so a long-running instance answers repeat queries
for the same order immediately.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import families
from .booldim import minimum_representation, parity_set_system
from .core import SimpleGraph, Tournament, from_code, invert_seq
from .errors import ParseError
from .hereditary import enumerate_classes, find_embedding, membership, obstructions
from .index import count_low_index, distance, index_all, index_table, inversion_index
from .schemas import (
    CodeRequest,
    CountRequest,
    DistanceRequest,
    EmbedRequest,
    GenRequest,
    IndexRequest,
    InvertRequest,
    MemberRequest,
    ObstructionsRequest,
    OpResponse,
    OrderRequest,
    UniversalRequest,
)
from .structure import acyclic_decompose, intervals, is_critical_tournament, noncritical_vertices
from .universal import build_sample, default_points, parse_sample_file, universality_check

app = FastAPI(title="inverto", description="inversion calculus on tournaments")


@app.exception_handler(ParseError)
def _on_parse_error(request: Request, exc: ParseError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(ValueError)
def _on_value_error(request: Request, exc: ValueError) -> JSONResponse:
    # includes CapExceeded; ParseError has its own handler above
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _tournament(code: str) -> Tournament:
    value = from_code(code)
    if not isinstance(value, Tournament):
        raise ValueError(f"expected a tournament code (T...), got {code!r}")
    return value


def _graph(code: str) -> SimpleGraph:
    value = from_code(code)
    if not isinstance(value, SimpleGraph):
        raise ValueError(f"expected a graph code (G...), got {code!r}")
    return value


def _sets_json(sets) -> list[list[int]]:
    return [sorted(s) for s in sets]


_HALF_ORDER = {"U": families.critical_u, "T": families.critical_t, "V": families.critical_v}
_FIXED = {
    "P7": families.paley7,
    "B6": families.bound_b6,
    "C3.2": families.c3_dot_2,
    "D5": families.d5,
    "T5": families.t5,
    "V5": families.v5,
    "C3": lambda: families.critical_u(1),
}


def _half_order_param(req: GenRequest) -> int:
    if req.order is not None:
        if req.params:
            raise ValueError("give either the half-order parameter or --order, not both")
        if req.order % 2 == 0:
            raise ValueError(f"this family has odd order 2n+1; {req.order} is even")
        return (req.order - 1) // 2
    if len(req.params) != 1:
        raise ValueError("expected exactly one parameter n (or --order)")
    return req.params[0]


def _resolve_family(req: GenRequest) -> Tournament:
    name = req.family.upper()
    if name in _FIXED:
        if req.params or req.order is not None:
            raise ValueError(f"family {req.family} takes no parameters")
        return _FIXED[name]()
    if name in ("TRANSITIVE", "CHAIN"):
        if req.order is not None:
            if req.params:
                raise ValueError("give either n or --order, not both")
            return families.transitive(req.order)
        if len(req.params) != 1:
            raise ValueError("expected exactly one parameter n")
        return families.transitive(req.params[0])
    if name in _HALF_ORDER:
        return _HALF_ORDER[name](_half_order_param(req))
    if name in families.MINUS_ONE_CRITICAL_KINDS:
        if req.order is not None:
            if len(req.params) != 1:
                raise ValueError("with --order, expected exactly one parameter k")
            if req.order % 2 == 0:
                raise ValueError(f"this family has odd order 2n+1; {req.order} is even")
            return families.minus_one_critical(name, (req.order - 1) // 2, req.params[0])
        if len(req.params) != 2:
            raise ValueError("expected exactly two parameters n k (or --order and k)")
        return families.minus_one_critical(name, req.params[0], req.params[1])
    known = sorted(_FIXED) + ["transitive"] + sorted(_HALF_ORDER) + list(families.MINUS_ONE_CRITICAL_KINDS)
    raise ValueError(f"unknown family {req.family!r}; known: {', '.join(known)}")


@app.post("/gen")
def op_gen(req: GenRequest) -> OpResponse:
    t = _resolve_family(req)
    return OpResponse(op="gen", input=req.model_dump(), result=t.to_code())


@app.post("/index")
def op_index(req: IndexRequest) -> OpResponse:
    result = inversion_index(_tournament(req.code), req.method, req.allow_large)
    return OpResponse(
        op="index",
        input=req.model_dump(),
        result=result.value,
        witness=_sets_json(result.witness),
    )


@app.post("/index-all")
def op_index_all(req: OrderRequest) -> OpResponse:
    table = index_all(req.n, req.allow_large)
    histogram = {str(k): v for k, v in sorted(table.histogram().items())}
    return OpResponse(
        op="index-all",
        input=req.model_dump(),
        result={"n": req.n, "histogram": histogram, "max": table.max_index()},
    )


@app.post("/table")
def op_table(req: OrderRequest) -> OpResponse:
    table = index_table(req.n, req.allow_large)
    return OpResponse(
        op="table",
        input=req.model_dump(),
        result={
            "n": table.n,
            "entries": [[code, value] for code, value in table.entries],
            "max": table.max_index,
        },
    )


@app.post("/distance")
def op_distance(req: DistanceRequest) -> OpResponse:
    value = distance(_tournament(req.code_t), _tournament(req.code_u))
    return OpResponse(op="distance", input=req.model_dump(), result=value)


@app.post("/booldim")
def op_booldim(req: CodeRequest) -> OpResponse:
    rep = minimum_representation(_graph(req.code))
    return OpResponse(
        op="booldim",
        input=req.model_dump(),
        result=rep.dimension,
        witness=_sets_json(parity_set_system(rep)),
    )


@app.post("/invert")
def op_invert(req: InvertRequest) -> OpResponse:
    result = invert_seq(_tournament(req.code), req.sets)
    return OpResponse(op="invert", input=req.model_dump(), result=result.to_code())


@app.post("/decompose")
def op_decompose(req: CodeRequest) -> OpResponse:
    decomposition = acyclic_decompose(_tournament(req.code))
    return OpResponse(
        op="decompose",
        input=req.model_dump(),
        result={
            "quotient": decomposition.quotient.to_code(),
            "blocks": [block.to_code() for block in decomposition.blocks],
            "block_vertices": [list(v) for v in decomposition.block_vertices],
        },
    )


@app.post("/intervals")
def op_intervals(req: CodeRequest) -> OpResponse:
    found = intervals(_tournament(req.code))
    return OpResponse(
        op="intervals",
        input=req.model_dump(),
        result=[sorted(x) for x in found],
    )


@app.post("/critical")
def op_critical(req: CodeRequest) -> OpResponse:
    t = _tournament(req.code)
    noncritical = noncritical_vertices(t)
    return OpResponse(
        op="critical",
        input=req.model_dump(),
        result={
            "critical": is_critical_tournament(t),
            "noncritical": sorted(noncritical),
        },
    )


@app.post("/member")
def op_member(req: MemberRequest) -> OpResponse:
    outcome = membership(_tournament(req.code), req.m, req.mode)
    if outcome.mode == "index":
        witness = {
            "index": outcome.index_value,
            "sets": _sets_json(outcome.witness_sets or ()),
        }
    elif outcome.member:
        witness = None
    else:
        witness = {
            "obstruction": outcome.obstruction,
            "embedding": list(outcome.embedding),
        }
    return OpResponse(
        op="member",
        input=req.model_dump(),
        result=outcome.member,
        witness=witness,
    )


@app.post("/enumerate")
def op_enumerate(req: OrderRequest) -> OpResponse:
    catalog = enumerate_classes(req.n, req.allow_large)
    return OpResponse(
        op="enumerate",
        input=req.model_dump(),
        result={"n": catalog.n, "count": len(catalog), "codes": list(catalog.codes)},
    )


@app.post("/obstructions")
def op_obstructions(req: ObstructionsRequest) -> OpResponse:
    report = obstructions(req.m, req.max_n, req.allow_large)
    return OpResponse(op="obstructions", input=req.model_dump(), result=report.to_json())


@app.post("/universal")
def op_universal(req: UniversalRequest) -> OpResponse:
    if req.sample_text is not None:
        width, points = parse_sample_file(req.sample_text)
        if width != req.m:
            raise ValueError(f"sample file has {width} flags per point, expected {req.m}")
    elif req.default_count is not None:
        points = default_points(req.m, req.default_count)
    else:
        raise ValueError("provide sample_text or default_count")
    sample = build_sample(req.m, points)
    report = universality_check(req.m, req.k, sample)
    result = report.to_json()
    result["sample_code"] = sample.tournament.to_code()
    result["sample_sets"] = _sets_json(sample.sets)
    return OpResponse(op="universal", input=req.model_dump(), result=result)


@app.post("/embed")
def op_embed(req: EmbedRequest) -> OpResponse:
    found = find_embedding(_tournament(req.pattern), _tournament(req.host))
    return OpResponse(
        op="embed",
        input=req.model_dump(),
        result=found is not None,
        witness=None if found is None else list(found),
    )


@app.post("/count")
def op_count(req: CountRequest) -> OpResponse:
    outcome = count_low_index(req.n, req.threshold, req.allow_large)
    return OpResponse(
        op="count",
        input=req.model_dump(),
        result={
            "n": outcome.n,
            "threshold": outcome.threshold,
            "count": outcome.count,
            "bound": outcome.bound,
        },
    )

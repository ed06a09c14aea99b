"""Command-line client for the inversion engine.

Every subcommand builds one HTTP request.  By default it is answered by an
in-process instance of the service; with --server the same request goes to
a running instance instead, so outputs are identical either way.

Exit codes: 0 success, 1 domain error (violated precondition or cap),
2 parse error (bad argv, bad code, bad input file).
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys
from pathlib import Path

import httpx


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _set_list(text: str) -> list[list[int]]:
    """Parse the --sets grammar: "{a,b,...};{...}", whitespace tolerated."""
    sets = []
    for part in text.split(";"):
        part = part.strip()
        if not (part.startswith("{") and part.endswith("}")):
            raise argparse.ArgumentTypeError(f"expected {{...}} around each set, got {part!r}")
        inner = part[1:-1].strip()
        try:
            sets.append([int(tok) for tok in inner.split(",")] if inner else [])
        except ValueError:
            raise argparse.ArgumentTypeError(f"non-integer vertex in {part!r}") from None
    return sets


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inverto",
        description="inversion calculus on tournaments: indices, distances, "
        "decompositions, catalogs, and universal samples",
    )
    parser.add_argument("--server", metavar="URL", help="base URL of a running service (default: in-process)")
    parser.add_argument("--json", action="store_true", help="print the raw JSON envelope instead of text")
    parser.add_argument(
        "--jobs",
        metavar="K",
        help="worker-count hint (falls back to INVERTO_JOBS); the engine computes sequentially, the hint is accepted for compatibility",
    )
    parser.add_argument("--max-order", type=int, metavar="N", help="refuse subcommands whose order argument exceeds N")
    parser.add_argument("--allow-n8", action="store_true", help="lift order caps from 7 to 8 where supported")
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")

    p = sub.add_parser("gen", help="construct a named family member")
    p.add_argument("family", help="transitive, U, T, V, E, F, G, H, F*, G*, P7, B6, C3.2, D5, T5, V5, C3")
    p.add_argument("params", type=int, nargs="*", help="family parameters (e.g. the half-order n, or n k)")
    p.add_argument("--order", type=int, help="give the vertex count instead of the half-order parameter")

    p = sub.add_parser("index", help="inversion index of a tournament, with witness")
    p.add_argument("code")
    p.add_argument("--method", choices=("state-bfs", "order-min"), default="state-bfs")

    p = sub.add_parser("index-all", help="index histogram over all labeled tournaments of an order")
    p.add_argument("n", type=int)

    p = sub.add_parser("table", help="index of every isomorphism class; last line is i(n)")
    p.add_argument("n", type=int)

    p = sub.add_parser("distance", help="graphic distance between two tournaments")
    p.add_argument("code_t")
    p.add_argument("code_u")

    p = sub.add_parser("booldim", help="Boolean dimension of a graph (G... code)")
    p.add_argument("code")

    p = sub.add_parser("invert", help="apply a sequence of set inversions")
    p.add_argument("code")
    p.add_argument("--sets", type=_set_list, required=True, metavar='"{a,b};{c,d}"')

    p = sub.add_parser("decompose", help="lexicographic decomposition into acyclic blocks")
    p.add_argument("code")

    p = sub.add_parser("intervals", help="list all intervals of a tournament")
    p.add_argument("code")

    p = sub.add_parser("critical", help="criticality report for an indecomposable tournament")
    p.add_argument("code")

    p = sub.add_parser("member", help="membership in I_m (index <= m)")
    p.add_argument("code")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mode", choices=("index", "forb"), default="index")

    p = sub.add_parser("enumerate", help="catalog of isomorphism classes of an order")
    p.add_argument("n", type=int)

    p = sub.add_parser("obstructions", help="bounds of I_m among classes of order <= max-n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-n", dest="max_n", type=int, required=True)

    p = sub.add_parser("universal", help="embed all small low-index classes into a universal sample")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--sample", required=True, metavar="FILE|default:K", help="sample points file, or default:K for K integer offsets per translate")
    p.add_argument("--k", type=int, default=5, help="largest pattern order to check (default 5)")

    p = sub.add_parser("embed", help="does the pattern embed into the host?")
    p.add_argument("pattern")
    p.add_argument("host")

    p = sub.add_parser("count", help="count tournaments of index < N, with the counting bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", dest="threshold", type=int, required=True)

    return parser


def _check_jobs(args: argparse.Namespace) -> None:
    raw = args.jobs if args.jobs is not None else os.environ.get("INVERTO_JOBS")
    if raw is None:
        return
    try:
        jobs = int(raw)
    except ValueError:
        raise _CliError(2, f"--jobs/INVERTO_JOBS must be an integer, got {raw!r}") from None
    if jobs < 1:
        raise _CliError(2, f"--jobs/INVERTO_JOBS must be >= 1, got {jobs}")


def _check_max_order(args: argparse.Namespace, value: int, what: str) -> None:
    if args.max_order is not None and value > args.max_order:
        raise _CliError(1, f"{what} {value} exceeds --max-order {args.max_order}")


def _build_request(args: argparse.Namespace) -> tuple[str, dict]:
    allow = bool(args.allow_n8)
    cmd = args.command
    if cmd == "gen":
        return "/gen", {"family": args.family, "params": args.params, "order": args.order}
    if cmd == "index":
        return "/index", {"code": args.code, "method": args.method, "allow_large": allow}
    if cmd == "index-all":
        _check_max_order(args, args.n, "order")
        return "/index-all", {"n": args.n, "allow_large": allow}
    if cmd == "table":
        _check_max_order(args, args.n, "order")
        return "/table", {"n": args.n, "allow_large": allow}
    if cmd == "distance":
        return "/distance", {"code_t": args.code_t, "code_u": args.code_u}
    if cmd == "booldim":
        return "/booldim", {"code": args.code}
    if cmd == "invert":
        return "/invert", {"code": args.code, "sets": args.sets}
    if cmd == "decompose":
        return "/decompose", {"code": args.code}
    if cmd == "intervals":
        return "/intervals", {"code": args.code}
    if cmd == "critical":
        return "/critical", {"code": args.code}
    if cmd == "member":
        return "/member", {"code": args.code, "m": args.m, "mode": args.mode}
    if cmd == "enumerate":
        _check_max_order(args, args.n, "order")
        return "/enumerate", {"n": args.n, "allow_large": allow}
    if cmd == "obstructions":
        _check_max_order(args, args.max_n, "max order")
        return "/obstructions", {"m": args.m, "max_n": args.max_n, "allow_large": allow}
    if cmd == "universal":
        payload = {"m": args.m, "k": args.k}
        if args.sample.startswith("default:"):
            try:
                payload["default_count"] = int(args.sample.split(":", 1)[1])
            except ValueError:
                raise _CliError(2, f"bad sample argument {args.sample!r}: expected default:K") from None
        else:
            path = Path(args.sample)
            if not path.exists():
                raise _CliError(1, f"sample file not found: {path}")
            payload["sample_text"] = path.read_text()
        return "/universal", payload
    if cmd == "embed":
        return "/embed", {"pattern": args.pattern, "host": args.host}
    if cmd == "count":
        _check_max_order(args, args.n, "order")
        return "/count", {"n": args.n, "threshold": args.threshold, "allow_large": allow}
    raise AssertionError(f"unhandled command {cmd}")


def _post(args: argparse.Namespace, path: str, payload: dict) -> httpx.Response:
    if args.server:
        with httpx.Client(base_url=args.server, timeout=600.0) as client:
            return client.post(path, json=payload)
    from .service import app  # deferred so --server runs stay light

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://inverto.local", timeout=600.0
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _fmt_set(values) -> str:
    return "{" + ",".join(str(v) for v in values) + "}"


def _fmt_sets(sets) -> str:
    return ";".join(_fmt_set(s) for s in sets) if sets else "(none)"


def _render(envelope: dict) -> str:
    op = envelope["op"]
    result = envelope["result"]
    witness = envelope.get("witness")
    if op in ("gen", "invert"):
        return result
    if op == "index":
        return f"value: {result}\nwitness: {_fmt_sets(witness)}"
    if op == "index-all":
        lines = [f"{k} {v}" for k, v in result["histogram"].items()]
        lines.append(f"max {result['max']}")
        return "\n".join(lines)
    if op == "table":
        lines = [f"{code} {value}" for code, value in result["entries"]]
        lines.append(f"i({result['n']}) = {result['max']}")
        return "\n".join(lines)
    if op == "distance":
        return str(result)
    if op == "booldim":
        return f"dimension: {result}\nsets: {_fmt_sets(witness)}"
    if op == "decompose":
        lines = [f"quotient: {result['quotient']}"]
        for i, (block, vertices) in enumerate(zip(result["blocks"], result["block_vertices"])):
            lines.append(f"block {i} {_fmt_set(vertices)}: {block}")
        return "\n".join(lines)
    if op == "intervals":
        return "\n".join(_fmt_set(x) for x in result)
    if op == "critical":
        return (
            f"critical: {'yes' if result['critical'] else 'no'}\n"
            f"noncritical: {_fmt_set(result['noncritical'])}"
        )
    if op == "member":
        lines = [f"member: {'yes' if result else 'no'}"]
        if isinstance(witness, dict) and "sets" in witness:
            lines.append(f"index: {witness['index']}")
            lines.append(f"witness: {_fmt_sets(witness['sets'])}")
        elif isinstance(witness, dict):
            lines.append(f"obstruction: {witness['obstruction']}")
            lines.append(f"embedding: {' '.join(str(v) for v in witness['embedding'])}")
        return "\n".join(lines)
    if op == "enumerate":
        return "\n".join([f"{result['count']} classes of order {result['n']}"] + result["codes"])
    if op == "obstructions":
        lines = [f"{len(result['bounds'])} bounds of I_{result['m']} ({result['scope']})"]
        for bound in result["bounds"]:
            deletions = " ".join(str(d) for d in bound["deletion_indices"])
            lines.append(f"{bound['code']} deletions: {deletions}")
        return "\n".join(lines)
    if op == "universal":
        lines = [
            f"sample: {result['sample_size']} points, {result['sample_code']}",
            f"sets: {_fmt_sets(result['sample_sets'])}",
            f"embedded {len(result['embedded'])} of {len(result['embedded']) + len(result['missing'])} classes",
        ]
        for code in result["missing"]:
            lines.append(f"missing: {code}")
        lines.append(f"passed: {'yes' if result['passed'] else 'no'}")
        return "\n".join(lines)
    if op == "embed":
        lines = [f"embeds: {'yes' if result else 'no'}"]
        if witness is not None:
            lines.append("map: " + " ".join(f"{i}->{h}" for i, h in enumerate(witness)))
        return "\n".join(lines)
    if op == "count":
        return f"count: {result['count']}\nbound: {result['bound']}"
    raise AssertionError(f"no renderer for op {op}")


def _detail(response: httpx.Response) -> str:
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = None
    if detail is None:
        return response.text
    if isinstance(detail, str):
        return detail
    return json.dumps(detail)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _check_jobs(args)
        path, payload = _build_request(args)
    except _CliError as exc:
        print(f"inverto: {exc}", file=sys.stderr)
        return exc.code
    try:
        response = _post(args, path, payload)
    except httpx.HTTPError as exc:
        print(f"inverto: request failed: {exc}", file=sys.stderr)
        return 1
    if response.status_code == 200:
        envelope = response.json()
        if args.json:
            print(json.dumps(envelope, indent=2))
        else:
            print(_render(envelope))
        return 0
    print(f"inverto: {_detail(response)}", file=sys.stderr)
    return 2 if response.status_code == 422 else 1


if __name__ == "__main__":
    sys.exit(main())

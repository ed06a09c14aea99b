"""Isomorphism machinery: canonical codes, catalogs, embeddings, and the
membership / obstruction queries built on them.

Canonicalization is a full permutation scan (cap: order 8), vectorized over
all n! relabelings at once.  Catalogs are built by extending each class of
order n-1 with every possible attachment of a new vertex, which keeps the
number of canonicalizations proportional to the number of classes rather
than to 2^(n(n-1)/2).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .core import InversionSequence, Tournament, delete_vertex, npairs, pair_index
from .errors import CapExceeded
from .families import bounds_of_i1, critical_u
from .index import ORDER_MIN_CAP, STATE_BFS_CAP, IndexResult, index_all, inversion_index

CANONICAL_CAP = 8
ENUMERATE_CAP = 7
ENUMERATE_HARD_CAP = 8

_PERMS_CACHE: dict[int, np.ndarray] = {}
_CATALOG_CACHE: dict[int, "IsoClassCatalog"] = {}


def _perm_array(n: int) -> np.ndarray:
    cached = _PERMS_CACHE.get(n)
    if cached is None:
        cached = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
        cached = cached.reshape(-1, n)  # permutations(range(0)) yields one empty row
        _PERMS_CACHE[n] = cached
    return cached


def _adjacency(t: Tournament) -> np.ndarray:
    m = np.zeros((t.n, t.n), dtype=np.uint8)
    for x, y in t.arcs():
        m[x, y] = 1
    return m


@dataclass(frozen=True)
class CanonicalForm:
    """Least-code representative of an isomorphism class, with the number
    of permutations achieving it (= size of the automorphism group)."""

    tournament: Tournament
    automorphisms: int


def canonical_form(t: Tournament) -> CanonicalForm:
    if t.n > CANONICAL_CAP:
        raise CapExceeded(f"canonical form supports order <= {CANONICAL_CAP}, got {t.n}")
    if t.n < 2:
        return CanonicalForm(t, 1)
    perms = _perm_array(t.n)
    gathered = _adjacency(t)[perms[:, :, None], perms[:, None, :]]
    rows, cols = np.triu_indices(t.n, 1)  # row-major, matching pair_index
    bit_rows = gathered[:, rows, cols].astype(np.int64)
    # weight the first pair heaviest so integer order == code-string order
    weights = np.int64(1) << np.arange(npairs(t.n) - 1, -1, -1, dtype=np.int64)
    codes = bit_rows @ weights
    winner = int(codes.argmin())
    automorphisms = int((codes == codes[winner]).sum())
    bits = 0
    for k, bit in enumerate(bit_rows[winner]):
        if bit:
            bits |= 1 << k
    return CanonicalForm(Tournament(t.n, bits), automorphisms)


def canonical_code(t: Tournament) -> str:
    return canonical_form(t).tournament.to_code()


@dataclass(frozen=True)
class IsoClassCatalog:
    """One canonical code per isomorphism class of a fixed order, sorted."""

    n: int
    codes: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self) -> Iterator[str]:
        return iter(self.codes)

    def __contains__(self, code: str) -> bool:
        return code in set(self.codes)

    def to_text(self) -> str:
        return "\n".join(self.codes) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "IsoClassCatalog":
        codes = tuple(line.strip() for line in text.splitlines() if line.strip())
        if not codes:
            raise ValueError("empty catalog")
        orders = {Tournament.from_code(code).n for code in codes}
        if len(orders) != 1:
            raise ValueError(f"catalog mixes orders {sorted(orders)}")
        if list(codes) != sorted(set(codes)):
            raise ValueError("catalog codes must be sorted and distinct")
        return cls(orders.pop(), codes)


def _extensions(base: Tournament) -> Iterator[Tournament]:
    """All tournaments obtained from base by appending one vertex."""
    n = base.n + 1
    prefix = 0
    for i in range(base.n - 1):
        for j in range(i + 1, base.n):
            if base.has_arc(i, j):
                prefix |= 1 << pair_index(n, i, j)
    for attachment in range(1 << base.n):
        bits = prefix
        for i in range(base.n):
            if attachment >> i & 1:
                bits |= 1 << pair_index(n, i, n - 1)
        yield Tournament(n, bits)


def enumerate_classes(n: int, allow_large: bool = False) -> IsoClassCatalog:
    """Catalog of all isomorphism classes of order n."""
    cap = ENUMERATE_HARD_CAP if allow_large else ENUMERATE_CAP
    if n > cap:
        hint = " (pass allow_large / --allow-n8)" if n == ENUMERATE_HARD_CAP else ""
        raise CapExceeded(f"enumerate supports order <= {cap}, got {n}{hint}")
    cached = _CATALOG_CACHE.get(n)
    if cached is not None:
        return cached
    if n <= 1:
        catalog = IsoClassCatalog(n, (Tournament(n, 0).to_code(),))
    else:
        seen = set()
        for code in enumerate_classes(n - 1, allow_large).codes:
            base = Tournament.from_code(code)
            for extended in _extensions(base):
                seen.add(canonical_code(extended))
        catalog = IsoClassCatalog(n, tuple(sorted(seen)))
    _CATALOG_CACHE[n] = catalog
    return catalog


def find_embedding(pattern: Tournament, host: Tournament) -> Optional[tuple[int, ...]]:
    """Injective arc-preserving map pattern -> host (induced copy), or None.

    Pattern vertices are assigned in descending out-degree order; host
    candidates are tried smallest-first, so the result is deterministic.
    """
    if pattern.n > host.n:
        return None
    if pattern.n == 0:
        return ()
    p_out = pattern.out_degrees()
    h_out = host.out_degrees()
    order = sorted(range(pattern.n), key=lambda v: (-p_out[v], v))
    image = [-1] * pattern.n
    used = [False] * host.n

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        pv = order[k]
        for hv in range(host.n):
            if used[hv]:
                continue
            if h_out[hv] < p_out[pv]:
                continue
            if (host.n - 1) - h_out[hv] < (pattern.n - 1) - p_out[pv]:
                continue
            ok = True
            for pu in order[:k]:
                if host.has_arc(hv, image[pu]) != pattern.has_arc(pv, pu):
                    ok = False
                    break
            if not ok:
                continue
            image[pv] = hv
            used[hv] = True
            if extend(k + 1):
                return True
            image[pv] = -1
            used[hv] = False
        return False

    if not extend(0):
        return None
    return tuple(image)


def embeds(pattern: Tournament, host: Tournament) -> bool:
    return find_embedding(pattern, host) is not None


@dataclass(frozen=True)
class MemberResult:
    """Outcome of an I_m membership test, with the deciding evidence."""

    member: bool
    m: int
    mode: str
    index_value: Optional[int] = None
    witness_sets: Optional[InversionSequence] = None
    obstruction: Optional[str] = None
    embedding: Optional[tuple[int, ...]] = None


def _index_any_method(t: Tournament) -> IndexResult:
    if t.n <= STATE_BFS_CAP:
        return inversion_index(t, "state-bfs")
    if t.n <= ORDER_MIN_CAP:
        return inversion_index(t, "order-min")
    raise CapExceeded(f"index computation supports order <= {ORDER_MIN_CAP}, got {t.n}")


def membership(t: Tournament, m: int, mode: str = "index") -> MemberResult:
    """Does t belong to I_m, i.e. is its inversion index at most m?

    mode "index" computes the index and compares; mode "forb" (m in {0,1}
    only) looks for an embedded bound instead.
    """
    if m < 0:
        raise ValueError("class parameter m must be >= 0")
    if mode == "index":
        result = _index_any_method(t)
        return MemberResult(
            member=result.value <= m,
            m=m,
            mode=mode,
            index_value=result.value,
            witness_sets=result.witness,
        )
    if mode == "forb":
        if m > 1:
            raise ValueError("forb mode is only available for m in {0, 1}: no known bound list beyond I_1")
        patterns = (critical_u(1),) if m == 0 else bounds_of_i1()
        for pattern in patterns:
            canon = canonical_form(pattern).tournament
            found = find_embedding(canon, t)
            if found is not None:
                return MemberResult(
                    member=False,
                    m=m,
                    mode=mode,
                    obstruction=canon.to_code(),
                    embedding=found,
                )
        return MemberResult(member=True, m=m, mode=mode)
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class ObstructionReport:
    """Bounds of I_m found among all classes of order <= max_n: tournaments
    outside the class whose every one-vertex deletion lies inside."""

    m: int
    max_n: int
    scope: str
    bounds: tuple[tuple[str, tuple[int, ...]], ...]  # (code, per-vertex deletion indices)

    @property
    def codes(self) -> tuple[str, ...]:
        return tuple(code for code, _ in self.bounds)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "max_n": self.max_n,
            "scope": self.scope,
            "bounds": [
                {"code": code, "deletion_indices": list(deletions)}
                for code, deletions in self.bounds
            ],
        }

    def to_text(self) -> str:
        lines = [f"bounds of I_{self.m} ({self.scope}): {len(self.bounds)}"]
        for code, deletions in self.bounds:
            lines.append(f"{code} deletions: {' '.join(str(d) for d in deletions)}")
        return "\n".join(lines) + "\n"


def obstructions(m: int, max_n: int, allow_large: bool = False) -> ObstructionReport:
    """Exhaustive scan for bounds of I_m over all classes of order <= max_n."""
    if m < 0:
        raise ValueError("class parameter m must be >= 0")
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    found = []
    for n in range(2, max_n + 1):
        table = index_all(n, allow_large)
        subtable = index_all(n - 1, allow_large)
        for code in enumerate_classes(n, allow_large).codes:
            t = Tournament.from_code(code)
            if table.value_of(t) <= m:
                continue
            deletions = tuple(subtable.value_of(delete_vertex(t, x)) for x in range(t.n))
            if all(d <= m for d in deletions):
                found.append((code, deletions))
    return ObstructionReport(m, max_n, f"search up to order {max_n}", tuple(sorted(found)))

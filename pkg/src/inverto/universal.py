"""Finite samples of the annotated rational chain and its inversion.

A sample point lives at q + sum of sqrt(p_i) over the flags i it carries
(p_i = i-th prime).  Since 1 and the square roots of distinct primes are
rationally independent, two distinct points never collide, and their order
can always be decided by interval arithmetic at some finite precision.
The inversion of the resulting chain by the flag classes X_i is a finite
piece of a tournament that embeds every countable tournament of index m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import isqrt
from typing import Iterable, Optional, Sequence

from .core import AnnotatedTournament, Tournament, VertexSet, invert_seq, npairs
from .errors import CapExceeded, ParseError
from .hereditary import enumerate_classes, find_embedding
from .index import inversion_index

UNIVERSALITY_M_CAP = 2
UNIVERSALITY_K_CAP = 5


@dataclass(frozen=True)
class ChainPoint:
    """One sample vertex: flag bits choosing the irrational shift, plus a
    rational offset.  Value = q + sum(sqrt(prime_i) for set bits i)."""

    mask: int
    q: Fraction

    def __post_init__(self):
        if self.mask < 0:
            raise ValueError("flag mask must be non-negative")
        if not isinstance(self.q, Fraction):
            object.__setattr__(self, "q", Fraction(self.q))


def _first_primes(count: int) -> list[int]:
    primes: list[int] = []
    candidate = 2
    while len(primes) < count:
        if all(candidate % p for p in primes):
            primes.append(candidate)
        candidate += 1
    return primes


def _sqrt_bounds(value: int, precision: int) -> tuple[Fraction, Fraction]:
    """Enclosure of sqrt(value) of width 1/2^precision."""
    scale = 1 << precision
    low = isqrt(value * scale * scale)
    return Fraction(low, scale), Fraction(low + 1, scale)


def compare_points(u: ChainPoint, v: ChainPoint) -> int:
    """Exact sign of value(u) - value(v): -1, 0, or 1.

    Doubles the enclosure precision until zero leaves the interval; only
    identical points compare equal, so this terminates.
    """
    if u.mask == v.mask:
        return (u.q > v.q) - (u.q < v.q)
    differing = u.mask ^ v.mask
    primes = _first_primes(differing.bit_length())
    signed = [
        (1 if u.mask >> i & 1 else -1, primes[i])
        for i in range(differing.bit_length())
        if differing >> i & 1
    ]
    rational = u.q - v.q
    precision = 8
    while True:
        low = high = rational
        for sign, prime in signed:
            a, b = _sqrt_bounds(prime, precision)
            if sign > 0:
                low += a
                high += b
            else:
                low -= b
                high -= a
        if low > 0:
            return 1
        if high < 0:
            return -1
        precision *= 2


@dataclass(frozen=True)
class WSample:
    """A finite induced piece of the universal tournament for index m.

    points are sorted ascending; annotated is the underlying chain with
    the flag classes X_i; tournament is its inversion by those classes.
    """

    m: int
    points: tuple[ChainPoint, ...]
    annotated: AnnotatedTournament
    tournament: Tournament

    @property
    def sets(self) -> tuple[VertexSet, ...]:
        return self.annotated.annotations


def build_sample(m: int, points: Iterable[ChainPoint]) -> WSample:
    """Sort the points exactly, annotate the chain, and invert it."""
    if m < 0:
        raise ValueError("m must be >= 0")
    pts = tuple(points)
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate sample point")
    for p in pts:
        if p.mask >> m:
            raise ValueError(f"point flags {p.mask:#b} exceed m = {m}")
    ordered = tuple(sorted(pts, key=cmp_to_key(compare_points)))
    k = len(ordered)
    chain = Tournament(k, (1 << npairs(k)) - 1)
    sets = tuple(
        frozenset(i for i, p in enumerate(ordered) if p.mask >> j & 1)
        for j in range(m)
    )
    return WSample(m, ordered, AnnotatedTournament(chain, sets), invert_seq(chain, sets))


def default_points(m: int, count: int) -> list[ChainPoint]:
    """count integer offsets in each of the 2^m translates."""
    if count < 0:
        raise ValueError("count must be >= 0")
    return [
        ChainPoint(mask, Fraction(q))
        for mask in range(1 << m)
        for q in range(count)
    ]


def parse_sample_file(text: str) -> tuple[int, list[ChainPoint]]:
    """Lines of `f-bits q-numerator/q-denominator`; returns (m, points)."""
    points = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected 'f-bits q' on line {lineno}", lineno)
        bits, q = fields
        if bits == "-":  # placeholder for m = 0, where points carry no flags
            flag_width = 0
            bits = ""
        elif bits.strip("01"):
            raise ParseError(f"flag bits must be 0/1 on line {lineno}", lineno)
        else:
            flag_width = len(bits)
        if width is None:
            width = flag_width
        elif flag_width != width:
            raise ParseError(f"inconsistent flag width on line {lineno}", lineno)
        mask = 0
        for i, ch in enumerate(bits):
            if ch == "1":
                mask |= 1 << i
        try:
            points.append(ChainPoint(mask, Fraction(q)))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad rational {q!r} on line {lineno}", lineno) from None
    if width is None:
        raise ParseError("empty sample file", 1)
    return width, points


def format_sample_file(sample: WSample) -> str:
    lines = []
    for p in sample.points:
        bits = "".join("1" if p.mask >> i & 1 else "0" for i in range(sample.m))
        if not bits:
            bits = "-"  # m = 0 has no flags; keep two fields per line
        lines.append(f"{bits} {p.q.numerator}/{p.q.denominator}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class UniversalityReport:
    """Which small classes of index <= m embed into a given sample."""

    m: int
    k: int
    sample_size: int
    embedded: tuple[str, ...]
    missing: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.missing

    @property
    def total(self) -> int:
        return len(self.embedded) + len(self.missing)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "sample_size": self.sample_size,
            "embedded": list(self.embedded),
            "missing": list(self.missing),
            "passed": self.passed,
        }


def universality_check(m: int, k: int, sample: WSample) -> UniversalityReport:
    """Try to embed every class of order <= k with index <= m into sample."""
    if m > UNIVERSALITY_M_CAP:
        raise CapExceeded(f"universality check supports m <= {UNIVERSALITY_M_CAP}, got {m}")
    if k > UNIVERSALITY_K_CAP:
        raise CapExceeded(f"universality check supports order <= {UNIVERSALITY_K_CAP}, got {k}")
    if sample.m != m:
        raise ValueError(f"sample was built for m = {sample.m}, not {m}")
    embedded = []
    missing = []
    for n in range(1, k + 1):
        for code in enumerate_classes(n).codes:
            t = Tournament.from_code(code)
            if inversion_index(t).value > m:
                continue
            if find_embedding(t, sample.tournament) is not None:
                embedded.append(code)
            else:
                missing.append(code)
    return UniversalityReport(m, k, len(sample.points), tuple(embedded), tuple(missing))


def escalate_universality(
    m: int, k: int, counts: Sequence[int] = (3, 6, 9, 12, 15, 20, 30)
) -> UniversalityReport:
    """Grow the default sample until the universality check passes; returns
    the first passing report, or the last attempt if none passes."""
    report: Optional[UniversalityReport] = None
    for count in counts:
        report = universality_check(m, k, build_sample(m, default_points(m, count)))
        if report.passed:
            return report
    assert report is not None
    return report

"""Orbit combinatorics on the embedded Lorenz template.

On the branch line, the points of a periodic orbit are its shifted itineraries.
Both bands preserve orientation, so two points sit in the same order as their
symbol sequences compared lexicographically (``x`` < ``y``).  One trip around the
template carries every point to its shift.  Two strands cross exactly when the
shift reverses their order, and every crossing on the standard template is
positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cmp_to_key
from itertools import combinations
from math import gcd
from typing import Iterable

from .symbolic import OrbitWord

__all__ = [
    "BranchPoint",
    "EmbeddingKind",
    "LorenzEmbedding",
    "compare_periodic",
    "branch_line_order",
    "linking_number",
    "self_crossings",
]


@dataclass(frozen=True)
class BranchPoint:
    """The point of ``word`` whose forward itinerary starts at ``phase``."""

    word: OrbitWord
    phase: int

    def __post_init__(self):
        if not 0 <= self.phase < len(self.word):
            raise ValueError(f"phase {self.phase} out of range for {self.word}")

    def itinerary(self) -> str:
        """One period of the forward symbol sequence."""
        return self.word.rotation(self.phase)

    def shift(self) -> BranchPoint:
        return BranchPoint(self.word, (self.phase + 1) % len(self.word))

    def __str__(self) -> str:
        return f"({self.itinerary()})^inf"


class EmbeddingKind(Enum):
    STANDARD = "Standard"
    TWISTED = "Twisted"
    TORUS_CABLE = "TorusCable"


@dataclass(frozen=True)
class LorenzEmbedding:
    """How the Lorenz template sits in the 3-sphere.

    ``twists`` is the full-twist count of the modified band; for a torus-knot
    band it is forced to ``p + q - 1``.
    """

    kind: EmbeddingKind = EmbeddingKind.STANDARD
    twists: int = 0
    p: int = 0
    q: int = 0
    concentric: bool = False

    def __post_init__(self):
        if self.kind is EmbeddingKind.STANDARD:
            if self.twists or self.p or self.q:
                raise ValueError("standard embedding carries no twist or torus data")
        elif self.kind is EmbeddingKind.TWISTED:
            if self.p or self.q or self.concentric:
                raise ValueError("twisted embedding carries only a twist count")
        else:
            if gcd(abs(self.p), abs(self.q)) != 1:
                raise ValueError(f"torus cable needs coprime (p, q), got ({self.p}, {self.q})")
            if self.twists != self.p + self.q - 1:
                raise ValueError(f"torus cable ({self.p}, {self.q}) must have twist {self.p + self.q - 1}")
            if self.concentric:
                raise ValueError("concentric flag only applies to the standard embedding")

    @classmethod
    def standard(cls, concentric: bool = False) -> LorenzEmbedding:
        return cls(EmbeddingKind.STANDARD, concentric=concentric)

    @classmethod
    def twisted(cls, n: int) -> LorenzEmbedding:
        return cls(EmbeddingKind.TWISTED, twists=n)

    @classmethod
    def torus_cable(cls, p: int, q: int) -> LorenzEmbedding:
        return cls(EmbeddingKind.TORUS_CABLE, twists=p + q - 1, p=p, q=q)


def compare_periodic(u: str, v: str) -> int:
    """Lexicographic comparison of the infinite sequences ``u^inf`` and ``v^inf``.

    Two periodic sequences that agree on their first ``len(u) + len(v)``
    symbols are identical, so a finite prefix settles the comparison.
    """
    n = len(u) + len(v)
    a = (u * (n // len(u) + 1))[:n]
    b = (v * (n // len(v) + 1))[:n]
    return (a > b) - (a < b)


def _point_key(point: BranchPoint) -> str:
    return point.itinerary()


_ORDER_KEY = cmp_to_key(lambda p, q: compare_periodic(_point_key(p), _point_key(q)))


def branch_line_order(orbits: Iterable[OrbitWord]) -> list[BranchPoint]:
    """All points of ``orbits`` on the branch line, left to right."""
    orbits = list(orbits)
    if len(set(orbits)) != len(orbits):
        raise ValueError("orbits must be pairwise distinct")
    points = [BranchPoint(w, i) for w in orbits for i in range(len(w))]
    return sorted(points, key=_ORDER_KEY)


def _reversals(points: list[BranchPoint], pairs) -> int:
    pos = {p: i for i, p in enumerate(points)}
    count = 0
    for u, v in pairs:
        before = pos[u] < pos[v]
        after = pos[u.shift()] < pos[v.shift()]
        count += before != after
    return count


def _require_standard(embedding: LorenzEmbedding | None) -> None:
    if embedding is not None and embedding.kind is not EmbeddingKind.STANDARD:
        raise NotImplementedError("orbit linking is only defined on the standard embedding")


def linking_number(w1: OrbitWord, w2: OrbitWord, embedding: LorenzEmbedding | None = None) -> int:
    """Linking number of two distinct periodic orbits on the standard template."""
    _require_standard(embedding)
    if w1 == w2:
        raise ValueError(f"linking number needs two distinct orbits, got {w1} twice")
    points = branch_line_order([w1, w2])
    a = [p for p in points if p.word == w1]
    b = [p for p in points if p.word == w2]
    crossings = _reversals(points, ((u, v) for u in a for v in b))
    if crossings % 2:
        raise ArithmeticError(f"odd crossing count {crossings} between {w1} and {w2}")
    return crossings // 2


def self_crossings(w: OrbitWord, embedding: LorenzEmbedding | None = None) -> int:
    """Crossings of an orbit with itself in the planar template diagram."""
    _require_standard(embedding)
    points = branch_line_order([w])
    return _reversals(points, combinations(points, 2))

"""Symbolic knot types closed under connected sum.

A knot type is a sorted multiset of prime factors; the empty multiset is the
unknot.  Torus factors carry a handedness flag which the Alexander polynomial
ignores.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Union

from .laurent import ONE, LaurentPoly, T

__all__ = [
    "TorusKnot",
    "NamedKnot",
    "KnotType",
    "UNKNOT",
    "TREFOIL",
    "torus",
    "named",
    "cable",
    "connected_sum",
    "torus_alexander",
    "alexander_of",
    "parse_knot",
]


@dataclass(frozen=True)
class TorusKnot:
    """Torus knot with ``2 <= p < q`` coprime; ``mirror`` selects the handedness."""

    p: int
    q: int
    mirror: bool = False

    def __post_init__(self):
        if not (2 <= self.p < self.q) or gcd(self.p, self.q) != 1:
            raise ValueError(f"torus knot needs coprime 2 <= p < q, got ({self.p}, {self.q})")

    def sort_key(self):
        return (0, self.p, self.q, self.mirror, "")

    def __str__(self) -> str:
        return f"torus({-self.p if self.mirror else self.p},{self.q})"


@dataclass(frozen=True)
class NamedKnot:
    """Opaque prime factor, identified only by its label."""

    label: str

    def __post_init__(self):
        if not self.label.strip():
            raise ValueError("knot label must be nonempty")
        _split_top(self.label, "#")  # rejects unbalanced parentheses

    def sort_key(self):
        return (1, 0, 0, False, self.label)

    def __str__(self) -> str:
        return f"named({self.label})"


Prime = Union[TorusKnot, NamedKnot]


@dataclass(frozen=True)
class KnotType:
    factors: tuple[Prime, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(sorted(self.factors, key=lambda f: f.sort_key())))

    @property
    def is_unknot(self) -> bool:
        return not self.factors

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1

    def torus_factor(self) -> TorusKnot | None:
        """The single torus factor if this knot is a torus knot, else None."""
        if len(self.factors) == 1 and isinstance(self.factors[0], TorusKnot):
            return self.factors[0]
        return None

    def mirror(self) -> KnotType:
        return KnotType(tuple(
            TorusKnot(f.p, f.q, not f.mirror) if isinstance(f, TorusKnot) else f for f in self.factors
        ))

    def __add__(self, other: KnotType) -> KnotType:
        return connected_sum(self, other)

    def __str__(self) -> str:
        if not self.factors:
            return "unknot"
        return " # ".join(str(f) for f in self.factors)


UNKNOT = KnotType()


def torus(p: int, q: int) -> KnotType:
    """Torus knot type ``T(p, q)``; degenerate parameters give the unknot.

    A negative product ``p*q`` gives the mirror image.
    """
    if gcd(abs(p), abs(q)) != 1:
        raise ValueError(f"torus({p},{q}) is a link, not a knot")
    a, b = sorted((abs(p), abs(q)))
    if a <= 1:
        return UNKNOT
    return KnotType((TorusKnot(a, b, p * q < 0),))


TREFOIL = torus(2, 3)


def named(label: str) -> KnotType:
    return KnotType((NamedKnot(label),))


def cable(p: int, q: int, of: KnotType) -> KnotType:
    """A ``(p, q)`` cable of ``of``, kept as an opaque labelled prime."""
    if of.is_unknot:
        return torus(p, q)
    return named(f"cable({p},{q},of={of})")


def connected_sum(k1: KnotType, k2: KnotType) -> KnotType:
    return KnotType(k1.factors + k2.factors)


def _cyclotomic_quotient(p: int, q: int) -> LaurentPoly:
    num = (T ** (p * q) - ONE) * (T - ONE)
    den = (T ** p - ONE) * (T ** q - ONE)
    return num.exact_div(den)


def torus_alexander(p: int, q: int) -> LaurentPoly:
    """``(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))`` by exact division."""
    return _cyclotomic_quotient(abs(p), abs(q))


def alexander_of(k: KnotType) -> LaurentPoly:
    """Normalized Alexander polynomial, multiplied over prime factors."""
    result = ONE
    for f in k.factors:
        if isinstance(f, NamedKnot):
            raise ValueError(f"no Alexander formula available for {f}")
        result = result * torus_alexander(f.p, f.q)
    return result.normalize()


def parse_knot(text: str) -> KnotType:
    """Parse ``unknot``, ``torus(p,q)``, ``named(label)`` and ``#``-joined sums."""
    parts = _split_top(text, "#")
    result = UNKNOT
    for part in parts:
        s = part.strip()
        if s == "unknot":
            k = UNKNOT
        elif s.startswith("torus(") and s.endswith(")"):
            args = s[len("torus("):-1].split(",")
            if len(args) != 2:
                raise ValueError(f"torus takes two integers: {s!r}")
            try:
                k = torus(int(args[0]), int(args[1]))
            except ValueError as exc:
                raise ValueError(f"bad torus knot {s!r}: {exc}") from None
        elif s.startswith("named(") and s.endswith(")"):
            k = named(s[len("named("):-1].strip())
        elif s.startswith("cable(") and s.endswith(")"):
            k = named(s)
        else:
            raise ValueError(f"cannot parse knot {s!r}")
        result = connected_sum(result, k)
    return result


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    parts.append(text[start:])
    return parts

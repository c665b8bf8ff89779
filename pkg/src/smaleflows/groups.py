"""Finitely presented groups, Fox calculus, and Alexander polynomials.

Words are tuples of ``(generator_index, ±1)`` letters kept freely reduced.
Everything is evaluated through an abelianization onto the infinite cyclic
group ``<t>``, so Fox derivatives come out as Laurent polynomials.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .laurent import ONE, DivisionError, LaurentMatrix, LaurentPoly, T, equal_up_to_units, lm_det

__all__ = [
    "GroupWord",
    "GroupPresentation",
    "AbelianizationMap",
    "PresentationError",
    "Certificate",
    "fox_derivative",
    "alexander_matrix",
    "alexander_from_presentation",
    "solve_abelianization",
    "unknot_certificate",
    "trefoil_presentation",
    "lorenz_repeller_presentation",
]


class PresentationError(ValueError):
    """Invalid presentation, abelianization, or presentation text."""


def _reduce(letters: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []
    for g, e in letters:
        if e not in (1, -1):
            raise ValueError(f"letter exponent must be ±1, got {e}")
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


@dataclass(frozen=True)
class GroupWord:
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def power(cls, g: int, n: int) -> GroupWord:
        return cls(((g, 1 if n > 0 else -1),) * abs(n))

    def __mul__(self, other: GroupWord) -> GroupWord:
        return GroupWord(self.letters + other.letters)

    def inverse(self) -> GroupWord:
        return GroupWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def exponent_sums(self, ngens: int) -> list[int]:
        sums = [0] * ngens
        for g, e in self.letters:
            sums[g] += e
        return sums

    def format(self, names: Sequence[str]) -> str:
        if not self.letters:
            return "1"
        return " ".join(names[g] + ("'" if e < 0 else "") for g, e in self.letters)


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[GroupWord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(self.relators))
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("duplicate generator names")
        for r in self.relators:
            for g, _ in r.letters:
                if not 0 <= g < len(self.generators):
                    raise PresentationError(f"relator references unknown generator index {g}")

    @property
    def deficiency(self) -> int:
        return len(self.generators) - len(self.relators)

    def index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise PresentationError(f"unknown generator {name!r}") from None

    @classmethod
    def parse(cls, text: str) -> GroupPresentation:
        """Parse ``<x, y | x y x = y x y>``.

        Letters are whitespace separated; ``x'``, ``x^-1`` and ``x^n`` are
        accepted.  Relators are separated by commas; an equation ``u = v``
        becomes the relator ``u v^-1``.
        """
        m = re.fullmatch(r"\s*<(.*)>\s*", text, re.S)
        if m is None or m.group(1).count("|") != 1:
            raise PresentationError(f"expected '<generators | relators>', got {text!r}")
        gens_text, rels_text = m.group(1).split("|")
        gens = tuple(g.strip() for g in gens_text.split(",") if g.strip())
        if not gens:
            raise PresentationError("presentation needs at least one generator")
        for g in gens:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", g):
                raise PresentationError(f"bad generator name {g!r}")
        index = {g: i for i, g in enumerate(gens)}
        relators = []
        for chunk in rels_text.split(","):
            if not chunk.strip():
                continue
            sides = chunk.split("=")
            if len(sides) > 2:
                raise PresentationError(f"relation {chunk.strip()!r} has more than one '='")
            words = [_parse_word(side, index) for side in sides]
            rel = words[0] if len(words) == 1 else words[0] * words[1].inverse()
            relators.append(rel)
        return cls(gens, tuple(relators))

    def __str__(self) -> str:
        rels = ", ".join(r.format(self.generators) for r in self.relators)
        return f"<{', '.join(self.generators)} | {rels}>"


def _parse_word(text: str, index: dict[str, int]) -> GroupWord:
    letters: list[tuple[int, int]] = []
    for tok in text.split():
        m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)('?)(?:\^(-?\d+))?", tok)
        if m is None:
            raise PresentationError(f"bad letter {tok!r}")
        name, prime, power = m.groups()
        if name not in index:
            raise PresentationError(f"unknown generator {name!r}")
        n = int(power) if power is not None else 1
        if prime:
            n = -n
        letters.extend(GroupWord.power(index[name], n).letters)
    return GroupWord(tuple(letters))


@dataclass(frozen=True)
class AbelianizationMap:
    """Generator ``i`` maps to ``t**exponents[i]``."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))

    def image(self, g: int) -> LaurentPoly:
        return LaurentPoly.monomial(1, self.exponents[g])

    def degree(self, w: GroupWord) -> int:
        return sum(self.exponents[g] * e for g, e in w.letters)

    def check(self, p: GroupPresentation) -> None:
        if len(self.exponents) != len(p.generators):
            raise PresentationError(
                f"abelianization has {len(self.exponents)} images for {len(p.generators)} generators")
        for r in p.relators:
            if self.degree(r) != 0:
                raise PresentationError(
                    f"relator {r.format(p.generators)} does not abelianize to 1 under {self.exponents}")


def fox_derivative(w: GroupWord, g: int, phi: AbelianizationMap) -> LaurentPoly:
    """``phi(dw/dg)`` by the Fox product rule."""
    if not 0 <= g < len(phi.exponents):
        raise PresentationError(f"unknown generator index {g}")
    terms: dict[int, int] = {}
    prefix = 0
    for h, e in w.letters:
        if h >= len(phi.exponents):
            raise PresentationError(f"unknown generator index {h}")
        if e > 0:
            if h == g:
                terms[prefix] = terms.get(prefix, 0) + 1
            prefix += phi.exponents[h]
        else:
            prefix -= phi.exponents[h]
            if h == g:
                terms[prefix] = terms.get(prefix, 0) - 1
    return LaurentPoly(terms)


def alexander_matrix(p: GroupPresentation, phi: AbelianizationMap) -> LaurentMatrix:
    n = len(p.generators)
    return LaurentMatrix(
        len(p.relators), n,
        [fox_derivative(r, j, phi) for r in p.relators for j in range(n)],
    )


def alexander_from_presentation(
    p: GroupPresentation, phi: AbelianizationMap | None = None, column: int | None = None
) -> LaurentPoly:
    """Alexander polynomial of a deficiency-one presentation (not normalized).

    Deletes ``column`` (default: the first generator with nontrivial image) from
    the Alexander matrix and corrects the minor by ``(t - 1) / (phi(x_j) - 1)``.
    """
    if phi is None:
        phi = solve_abelianization(p)
    phi.check(p)
    if p.deficiency != 1:
        raise PresentationError(
            f"need deficiency one, got {len(p.generators)} generators and {len(p.relators)} relators")
    if column is None:
        column = next((j for j, e in enumerate(phi.exponents) if e != 0), None)
        if column is None:
            raise PresentationError("abelianization is trivial")
    if phi.exponents[column] == 0:
        raise DivisionError(f"generator {p.generators[column]} maps to 1; cannot delete its column")
    minor = lm_det(alexander_matrix(p, phi).delete_column(column))
    try:
        return (minor * (T - ONE)).exact_div(phi.image(column) - ONE)
    except DivisionError as exc:
        raise DivisionError(f"presentation and abelianization are incompatible: {exc}") from None


def solve_abelianization(p: GroupPresentation) -> AbelianizationMap:
    """The map onto ``<t>`` when the abelianization is infinite cyclic.

    The exponent-sum matrix must have rank ``g - 1`` with trivial torsion,
    i.e. its ``(g-1)``-minors are coprime; the kernel generator is then the
    vector of signed maximal minors of any full-rank subset of rows.
    """
    g = len(p.generators)
    rows = [r.exponent_sums(g) for r in p.relators]
    if g == 1:
        if any(r[0] for r in rows):
            raise PresentationError("abelianization is finite, not infinite cyclic")
        return AbelianizationMap((1,))
    minors_gcd = 0
    kernel = None
    for subset in combinations(rows, g - 1):
        vec = [(-1) ** j * _int_det([[r[k] for k in range(g) if k != j] for r in subset]) for j in range(g)]
        for v in vec:
            minors_gcd = gcd(minors_gcd, v)
        if kernel is None and any(vec):
            kernel = vec
    if kernel is None:
        raise PresentationError("abelianization has rank greater than one")
    if minors_gcd != 1:
        raise PresentationError(f"abelianization has torsion (minor gcd {minors_gcd})")
    c = 0
    for v in kernel:
        c = gcd(c, v)
    kernel = [v // c for v in kernel]
    if next(v for v in kernel if v) < 0:
        kernel = [-v for v in kernel]
    phi = AbelianizationMap(tuple(kernel))
    phi.check(p)
    return phi


def _int_det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    return lm_det(LaurentMatrix(n, n, [v for r in m for v in r])).coefficient(0)


class Certificate(Enum):
    NOT_UNKNOT = "NotUnknot"
    INCONCLUSIVE = "Inconclusive"


def unknot_certificate(p: GroupPresentation, phi: AbelianizationMap | None = None) -> Certificate:
    """One-directional unknot test: a nontrivial Alexander polynomial rules it out."""
    delta = alexander_from_presentation(p, phi)
    if equal_up_to_units(delta, ONE):
        return Certificate.INCONCLUSIVE
    return Certificate.NOT_UNKNOT


def trefoil_presentation() -> GroupPresentation:
    return GroupPresentation.parse("<x, y | x y x = y x y>")


def lorenz_repeller_presentation(p: int) -> GroupPresentation:
    """``<r, y | y' r^p y' = r^p y' r^p>``, from the saddle-plus-repeller complement."""
    return GroupPresentation.parse(f"<r, y | y' r^{p} y' = r^{p} y' r^{p}>")


"""Franks' determinant formulas for simple Smale flows.

``|lk(a, r)|`` is the product of ``|det(I - S_i)|`` over the saddle sets, and
for a single saddle the Alexander polynomials of the attracting and repelling
orbits are ``det(I - L_a)`` and ``det(I - L_r)`` up to units.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .laurent import LaurentMatrix, LaurentPoly, is_symmetric, lm_det
from .symbolic import LORENZ_STRUCTURE, IncidenceMatrix, StructureMatrix

__all__ = [
    "LinkingMatrix",
    "SaddleData",
    "structure_determinant",
    "linking_attractor_repeller",
    "alexander_from_linking_matrix",
    "build_lorenz_linking_matrix",
    "validate_simple_linking_matrix",
]


@dataclass(frozen=True)
class LinkingMatrix:
    """Structure-matrix signs decorated with loop linking exponents.

    Entry ``(i, j)`` is ``signs[i][j] * t**exponents[i][j]``.  Exponents under a
    zero sign carry no meaning and are stored as 0.
    """

    signs: tuple[tuple[int, ...], ...]
    exponents: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        signs = tuple(tuple(int(v) for v in r) for r in self.signs)
        exps = tuple(tuple(int(v) for v in r) for r in self.exponents)
        n = len(signs)
        if len(exps) != n or any(len(r) != n for r in signs + exps):
            raise ValueError("linking matrix signs and exponents must be square of equal size")
        if any(v not in (-1, 0, 1) for r in signs for v in r):
            raise ValueError("linking matrix signs must be -1, 0 or 1")
        exps = tuple(tuple(e if s else 0 for s, e in zip(sr, er)) for sr, er in zip(signs, exps))
        object.__setattr__(self, "signs", signs)
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def from_structure(cls, s: StructureMatrix, exponents: Sequence[Sequence[int]]) -> LinkingMatrix:
        return cls(s.entries, tuple(tuple(r) for r in exponents))

    @property
    def size(self) -> int:
        return len(self.signs)

    @property
    def structure(self) -> StructureMatrix:
        return StructureMatrix(self.signs)

    def to_laurent(self) -> LaurentMatrix:
        n = self.size
        return LaurentMatrix(
            n, n,
            [LaurentPoly.monomial(self.signs[i][j], self.exponents[i][j]) for i in range(n) for j in range(n)],
        )

    def raw_determinant(self) -> LaurentPoly:
        """``det(I - L)`` without unit normalization."""
        return lm_det(LaurentMatrix.identity(self.size) - self.to_laurent())


def structure_determinant(s: StructureMatrix) -> int:
    """``det(I - S)`` as an integer."""
    d = LinkingMatrix(s.entries, tuple((0,) * s.size for _ in range(s.size))).raw_determinant()
    return d.coefficient(0)


@dataclass(frozen=True)
class SaddleData:
    """One basic saddle set.

    When the matrices are known they are stored and every determinant is
    derived from them.  A saddle can also be *opaque*: only the determinant
    values are recorded, for constructions whose Markov partition is not
    determined combinatorially.
    """

    structure: StructureMatrix | None
    linking_a: LinkingMatrix | None
    linking_r: LinkingMatrix | None
    det_structure: int
    delta_a: LaurentPoly | None
    delta_r: LaurentPoly | None
    label: str = ""

    def __post_init__(self):
        mats = [m for m in (self.linking_a, self.linking_r) if m is not None]
        if mats and self.structure is None:
            raise ValueError("linking matrices need an accompanying structure matrix")
        if self.structure is not None:
            for m in mats:
                if m.signs != self.structure.entries:
                    raise ValueError("linking matrix sign pattern must equal the structure matrix")
            if self.det_structure != structure_determinant(self.structure):
                raise ValueError("det(I - S) disagrees with the structure matrix")
        for m, d, name in ((self.linking_a, self.delta_a, "attractor"), (self.linking_r, self.delta_r, "repeller")):
            if m is not None and d != m.raw_determinant():
                raise ValueError(f"{name} determinant disagrees with its linking matrix")

    @classmethod
    def from_matrices(
        cls,
        structure: StructureMatrix,
        linking_a: LinkingMatrix | None = None,
        linking_r: LinkingMatrix | None = None,
        label: str = "",
    ) -> SaddleData:
        return cls(
            structure=structure,
            linking_a=linking_a,
            linking_r=linking_r,
            det_structure=structure_determinant(structure),
            delta_a=None if linking_a is None else linking_a.raw_determinant(),
            delta_r=None if linking_r is None else linking_r.raw_determinant(),
            label=label,
        )

    @classmethod
    def opaque(
        cls,
        det_structure: int,
        delta_a: LaurentPoly | None,
        delta_r: LaurentPoly | None,
        label: str = "",
    ) -> SaddleData:
        return cls(None, None, None, det_structure, delta_a, delta_r, label)

    @classmethod
    def lorenz(cls, q_attractor: int = 0, q_repeller: int = 0, label: str = "lorenz") -> SaddleData:
        return cls.from_matrices(
            LORENZ_STRUCTURE,
            build_lorenz_linking_matrix(q_attractor),
            build_lorenz_linking_matrix(q_repeller),
            label=label,
        )

    def swapped(self) -> SaddleData:
        """Same saddle with the roles of attractor and repeller exchanged."""
        return SaddleData(
            self.structure, self.linking_r, self.linking_a,
            self.det_structure, self.delta_r, self.delta_a, self.label,
        )

    @property
    def incidence(self) -> IncidenceMatrix | None:
        return None if self.structure is None else self.structure.incidence

    @property
    def is_opaque(self) -> bool:
        return self.structure is None


def linking_attractor_repeller(saddles: Sequence[SaddleData | StructureMatrix]) -> int:
    """``|lk(a, r)| = prod |det(I - S_i)|``; the empty product is 1."""
    result = 1
    for s in saddles:
        d = structure_determinant(s) if isinstance(s, StructureMatrix) else s.det_structure
        result *= abs(d)
    return result


def alexander_from_linking_matrix(m: LinkingMatrix) -> LaurentPoly:
    return m.raw_determinant().normalize()


def build_lorenz_linking_matrix(q: int) -> LinkingMatrix:
    """Lorenz linking matrix with rows ``(t^q, t^q)`` and ``(t^-q, t^-q)``."""
    return LinkingMatrix(LORENZ_STRUCTURE.entries, ((q, q), (-q, -q)))


def validate_simple_linking_matrix(m: LinkingMatrix) -> LaurentPoly:
    """Return ``det(I - L)``, rejecting matrices whose determinant is not symmetric.

    A knot's Alexander polynomial is symmetric up to units, so a linking matrix
    for the attractor or repeller of a simple flow must yield one.
    """
    d = m.raw_determinant()
    if not is_symmetric(d):
        raise ValueError(f"det(I - L) = {d} is not symmetric; not a knot's Alexander polynomial")
    return d

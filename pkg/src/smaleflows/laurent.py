"""Integer Laurent polynomials in one variable ``t`` and matrices over them.

Polynomials are immutable; arithmetic never normalizes by units.  Use
:meth:`LaurentPoly.normalize` (or :func:`equal_up_to_units`) when a value is
only meaningful up to multiplication by ``±t^n``, as Alexander polynomials are.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

__all__ = [
    "LaurentPoly",
    "LaurentMatrix",
    "DivisionError",
    "T",
    "ONE",
    "ZERO",
    "lp_arith",
    "equal_up_to_units",
    "is_symmetric",
    "lm_det",
]


class DivisionError(ArithmeticError):
    """Raised when a Laurent polynomial division is not exact."""


class LaurentPoly:
    """A Laurent polynomial with integer coefficients.

    >>> p = LaurentPoly({-1: 1, 0: -1, 1: 1})
    >>> str(p)
    't^-1 - 1 + t'
    >>> str(p.normalize())
    '1 - t + t^2'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be int")
            acc[e] = acc.get(e, 0) + c
        object.__setattr__(self, "_terms", tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # construction -------------------------------------------------------

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 0) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int], low: int = 0) -> LaurentPoly:
        """Dense constructor: ``coeffs[i]`` multiplies ``t^(low + i)``."""
        return cls((low + i, c) for i, c in enumerate(coeffs))

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse the canonical text form, e.g. ``"t^-1 - 1 + t"`` or ``"3*t^2"``."""
        s = text.replace("−", "-").replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return ZERO
        terms: dict[int, int] = {}
        for chunk in re.split(r"(?<!\^)(?=[+-])", s):
            if not chunk:
                continue
            m = _TERM_RE.fullmatch(chunk)
            if m is None or (not m.group("coeff") and not m.group("var")):
                raise ValueError(f"cannot parse term {chunk!r} in {text!r}")
            sign = -1 if m.group("sign") == "-" else 1
            coeff = int(m.group("coeff")) if m.group("coeff") else 1
            if m.group("var"):
                if m.group("coeff") and not m.group("star"):
                    raise ValueError(f"missing '*' in term {chunk!r}")
                exp = int(m.group("exp")) if m.group("exp") is not None else 1
            else:
                exp = 0
            terms[exp] = terms.get(exp, 0) + sign * coeff
        return cls(terms)

    # basic queries --------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        """``(exponent, coefficient)`` pairs in ascending exponent order."""
        return self._terms

    def as_dict(self) -> dict[int, int]:
        return dict(self._terms)

    def coefficient(self, exp: int) -> int:
        return dict(self._terms).get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and self._terms[0][1] in (1, -1)

    @property
    def low(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return self._terms[0][0]

    @property
    def high(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[-1][0]

    def span(self) -> int:
        """Difference between the top and bottom exponents (0 for monomials)."""
        return self.high - self.low if self._terms else 0

    def at_one(self) -> int:
        return sum(c for _, c in self._terms)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        return LaurentPoly(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly((e, -c) for e, c in self._terms)

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> LaurentPoly:
        return _coerce(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_unit():
                raise DivisionError("only units have negative powers")
            (e, c), = self._terms
            return LaurentPoly({e * n: 1 if n % 2 == 0 else c})
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, n: int) -> LaurentPoly:
        """Multiply by ``t^n``."""
        return LaurentPoly((e + n, c) for e, c in self._terms)

    def substitute_inverse(self) -> LaurentPoly:
        """Return ``p(1/t)``."""
        return LaurentPoly((-e, c) for e, c in self._terms)

    def exact_div(self, other: LaurentPoly | int) -> LaurentPoly:
        """Quotient ``self / other`` in Z[t, t^-1]; raises DivisionError unless exact."""
        other = _coerce(other)
        if other.is_zero():
            raise DivisionError("division by zero polynomial")
        if self.is_zero():
            return ZERO
        # both shifted to ordinary polynomials with nonzero constant term
        num = [0] * (self.span() + 1)
        for e, c in self._terms:
            num[e - self.low] = c
        den = [0] * (other.span() + 1)
        for e, c in other._terms:
            den[e - other.low] = c
        if len(den) > len(num):
            raise DivisionError(f"{other} does not divide {self}")
        lead = den[-1]
        quot = [0] * (len(num) - len(den) + 1)
        for k in range(len(quot) - 1, -1, -1):
            c, r = divmod(num[k + len(den) - 1], lead)
            if r:
                raise DivisionError(f"{other} does not divide {self}")
            quot[k] = c
            if c:
                for i, d in enumerate(den):
                    num[k + i] -= c * d
        if any(num):
            raise DivisionError(f"{other} does not divide {self}")
        return LaurentPoly.from_coefficients(quot, self.low - other.low)

    # normal forms ---------------------------------------------------------

    def normalize(self) -> LaurentPoly:
        """Unit multiple with lowest exponent 0 and positive lowest coefficient."""
        if not self._terms:
            return self
        e, c = self._terms[0]
        p = self.shift(-e)
        return -p if c < 0 else p

    # comparison / hashing -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self._terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)


_TERM_RE = re.compile(
    r"(?P<sign>[+-]?)(?P<coeff>\d+)?(?:(?P<star>\*)?(?P<var>t)(?:\^(?P<exp>-?\d+))?)?"
)


def _coerce(x: LaurentPoly | int) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
T = LaurentPoly.monomial(1, 1)


def lp_arith(op: str, p: LaurentPoly, q: LaurentPoly | None = None) -> LaurentPoly:
    """Dispatch helper for ``add``, ``sub``, ``mul`` and ``negate``."""
    if op == "negate":
        return -p
    if q is None:
        raise ValueError(f"{op} needs two operands")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def equal_up_to_units(p: LaurentPoly, q: LaurentPoly) -> bool:
    """True iff ``p == ±t^n * q`` for some integer ``n``."""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    return p.normalize() == q.normalize()


def is_symmetric(p: LaurentPoly) -> bool:
    """True iff ``p(t) == ±t^n * p(1/t)`` for some ``n``."""
    if p.is_zero():
        return True
    mirrored = p.substitute_inverse().shift(p.low + p.high)
    return mirrored == p or mirrored == -p


class LaurentMatrix:
    """Dense row-major matrix of Laurent polynomials."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[LaurentPoly | int]):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(_coerce(x) for x in entries))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[LaurentPoly | int]]) -> LaurentMatrix:
        if not rows:
            return cls(0, 0, ())
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix rows")
        return cls(len(rows), width, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> LaurentMatrix:
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[LaurentPoly, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[LaurentPoly]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __sub__(self, other: LaurentMatrix) -> LaurentMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return LaurentMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __add__(self, other: LaurentMatrix) -> LaurentMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return LaurentMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def delete_column(self, j: int) -> LaurentMatrix:
        keep = [k for k in range(self.cols) if k != j]
        return LaurentMatrix(self.rows, self.cols - 1, [self[i, k] for i in range(self.rows) for k in keep])

    def det(self) -> LaurentPoly:
        return lm_det(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"LaurentMatrix([{body}])"


def lm_det(m: LaurentMatrix) -> LaurentPoly:
    """Determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return ONE
    a = m.to_rows()
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
            a[i][k] = ZERO
        prev = pivot
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]

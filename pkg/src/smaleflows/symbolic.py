"""Subshifts of finite type: incidence/structure matrices and periodic orbits.

Periodic orbits of the suspended subshift are cyclic words over the strip
alphabet.  Each orbit is stored as its lexicographically least rotation (a
Lyndon word), so orbit sets never contain rotations of one another.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from string import ascii_lowercase
from typing import Iterator, Sequence

__all__ = [
    "LORENZ_ALPHABET",
    "OrbitWord",
    "IncidenceMatrix",
    "StructureMatrix",
    "LORENZ_INCIDENCE",
    "LORENZ_STRUCTURE",
    "default_alphabet",
    "least_rotation",
    "is_primitive",
    "mobius",
    "count_periodic_points",
    "count_closed_orbits",
    "enumerate_orbits",
    "orbits_up_to",
]

LORENZ_ALPHABET = "xy"


def least_rotation(s: str) -> str:
    return min(s[i:] + s[:i] for i in range(len(s)))


def is_primitive(s: str) -> bool:
    """A word is primitive iff it is not a proper power of a shorter word."""
    n = len(s)
    return (s + s).find(s, 1) == n


@dataclass(frozen=True, order=True)
class OrbitWord:
    """A periodic orbit, as its canonical (least) rotation of a primitive word.

    Construct via :meth:`of`, which rotates into canonical form.  Ordering is
    length first, then lexicographic, matching the CLI listing order.
    """

    length: int = field(init=False, repr=False)
    letters: str

    def __post_init__(self):
        if not self.letters:
            raise ValueError("orbit word must be nonempty")
        if not is_primitive(self.letters):
            raise ValueError(f"{self.letters!r} is a proper power, not a primitive orbit")
        if least_rotation(self.letters) != self.letters:
            raise ValueError(f"{self.letters!r} is not in canonical rotation; use OrbitWord.of")
        object.__setattr__(self, "length", len(self.letters))

    @classmethod
    def of(cls, letters: str) -> OrbitWord:
        return cls(least_rotation(letters))

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return self.letters

    def rotation(self, phase: int) -> str:
        k = phase % self.length
        return self.letters[k:] + self.letters[:k]


class IncidenceMatrix:
    """Square 0/1 matrix with no all-zero row or column."""

    __slots__ = ("entries", "alphabet")

    def __init__(self, entries: Sequence[Sequence[int]], alphabet: str | None = None):
        rows = tuple(tuple(int(v) for v in r) for r in entries)
        n = len(rows)
        if n == 0:
            raise ValueError("incidence matrix must be nonempty")
        if any(len(r) != n for r in rows):
            raise ValueError("incidence matrix must be square")
        if any(v not in (0, 1) for r in rows for v in r):
            raise ValueError("incidence entries must be 0 or 1")
        for i in range(n):
            if not any(rows[i]):
                raise ValueError(f"row {i} has no transitions (wandering partition element)")
            if not any(rows[j][i] for j in range(n)):
                raise ValueError(f"column {i} has no transitions (wandering partition element)")
        alphabet = default_alphabet(n) if alphabet is None else alphabet
        if len(alphabet) != n or len(set(alphabet)) != n:
            raise ValueError(f"alphabet {alphabet!r} does not label {n} distinct strips")
        self.entries = rows
        self.alphabet = alphabet

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IncidenceMatrix):
            return NotImplemented
        return self.entries == other.entries and self.alphabet == other.alphabet

    def __hash__(self) -> int:
        return hash((self.entries, self.alphabet))

    def __repr__(self) -> str:
        return f"IncidenceMatrix({[list(r) for r in self.entries]}, alphabet={self.alphabet!r})"

    def admissible(self, word: str) -> bool:
        """Whether every cyclically adjacent letter pair is an allowed transition."""
        idx = {c: i for i, c in enumerate(self.alphabet)}
        try:
            codes = [idx[c] for c in word]
        except KeyError:
            return False
        n = len(codes)
        return all(self.entries[codes[k]][codes[(k + 1) % n]] for k in range(n))


class StructureMatrix:
    """Incidence matrix signed by the orientation behaviour of the return map."""

    __slots__ = ("entries", "incidence")

    def __init__(self, entries: Sequence[Sequence[int]], alphabet: str | None = None):
        rows = tuple(tuple(int(v) for v in r) for r in entries)
        if any(v not in (-1, 0, 1) for r in rows for v in r):
            raise ValueError("structure matrix entries must be -1, 0 or 1")
        self.incidence = IncidenceMatrix([[abs(v) for v in r] for r in rows], alphabet)
        self.entries = rows

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StructureMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"StructureMatrix({[list(r) for r in self.entries]})"


LORENZ_INCIDENCE = IncidenceMatrix([[1, 1], [1, 1]], LORENZ_ALPHABET)
LORENZ_STRUCTURE = StructureMatrix([[1, 1], [1, 1]], LORENZ_ALPHABET)


def default_alphabet(n: int) -> str:
    if n == 2:
        return LORENZ_ALPHABET
    if n > len(ascii_lowercase):
        raise ValueError("default alphabet supports at most 26 strips")
    return ascii_lowercase[:n]


def _matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n) if a[i][k]) for j in range(n))
        for i in range(n)
    )


def _matpow(a, n):
    size = len(a)
    result = tuple(tuple(int(i == j) for j in range(size)) for i in range(size))
    while n:
        if n & 1:
            result = _matmul(result, a)
        a = _matmul(a, a)
        n >>= 1
    return result


def count_periodic_points(a: IncidenceMatrix, n: int) -> int:
    """Number of period-``n`` points of the return map, i.e. ``trace(A^n)``."""
    if n < 1:
        raise ValueError("period must be >= 1")
    p = _matpow(a.entries, n)
    return sum(p[i][i] for i in range(a.size))


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for positive integers")
    result, m, d = 1, n, 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1
    return -result if m > 1 else result


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def count_closed_orbits(a: IncidenceMatrix, n: int) -> int:
    """Number of primitive periodic orbits of least period ``n`` (necklace count)."""
    if n < 1:
        raise ValueError("period must be >= 1")
    total = sum(mobius(d) * count_periodic_points(a, n // d) for d in _divisors(n))
    q, r = divmod(total, n)
    if r or q < 0:
        raise ArithmeticError(f"necklace sum {total} not a nonnegative multiple of {n}")
    return q


def _lyndon_words(alphabet: str, n: int) -> Iterator[str]:
    """Duval's algorithm: Lyndon words of length exactly ``n`` in lexicographic order."""
    k = len(alphabet)
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == n:
            yield "".join(alphabet[i] for i in w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()


def enumerate_orbits(a: IncidenceMatrix, n: int) -> list[OrbitWord]:
    """All admissible periodic orbits of least period ``n``, lexicographically sorted."""
    if n < 1:
        raise ValueError("period must be >= 1")
    # letters in alphabet order so that Duval output is lexicographic in the same order
    alphabet = "".join(sorted(a.alphabet))
    return [OrbitWord(w) for w in _lyndon_words(alphabet, n) if a.admissible(w)]


def orbits_up_to(a: IncidenceMatrix, max_period: int) -> list[OrbitWord]:
    """Orbits of every period ``1..max_period`` in length-then-lexicographic order."""
    return [w for n in range(1, max_period + 1) for w in enumerate_orbits(a, n)]

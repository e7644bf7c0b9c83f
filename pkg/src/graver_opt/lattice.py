"""Exact integer vectors, matrices and extended-integer bounds.

Vectors are plain tuples of Python ints, so arithmetic is arbitrary precision
and values are immutable and hashable. Infinite bounds are ``math.inf`` and
``-math.inf``; every finite bound is an ``int``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Integral
from typing import Iterable, Sequence

from .errors import DimensionError, DomainError

POS_INF = math.inf
NEG_INF = -math.inf

IntVector = tuple  # tuple[int, ...]


def as_vector(values: Iterable) -> tuple:
    """Coerce an iterable of integral values into an IntVector."""
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, Integral):
            raise DomainError(f"non-integer vector entry {v!r}")
        out.append(int(v))
    return tuple(out)


def _check_lengths(x, y):
    if len(x) != len(y):
        raise DimensionError(f"length mismatch: {len(x)} vs {len(y)}")


def pointwise_product(g: Sequence[int], h: Sequence[int]) -> tuple:
    _check_lengths(g, h)
    return tuple(a * b for a, b in zip(g, h))


def same_orthant(g: Sequence[int], h: Sequence[int]) -> bool:
    """True iff ``g∘h >= 0`` (closed orthants: zeros are compatible with anything)."""
    _check_lengths(g, h)
    return all(a * b >= 0 for a, b in zip(g, h))


def conformal(x: Sequence[int], y: Sequence[int]) -> bool:
    """The conformal order: ``x ⊑ y``."""
    _check_lengths(x, y)
    return all(a * b >= 0 and abs(a) <= abs(b) for a, b in zip(x, y))


def dot(x: Sequence[int], y: Sequence[int]) -> int:
    _check_lengths(x, y)
    return sum(a * b for a, b in zip(x, y))


def add(x, y):
    _check_lengths(x, y)
    return tuple(a + b for a, b in zip(x, y))


def sub(x, y):
    _check_lengths(x, y)
    return tuple(a - b for a, b in zip(x, y))


def scale(c: int, x) -> tuple:
    return tuple(c * a for a in x)


def neg(x) -> tuple:
    return tuple(-a for a in x)


def inf_norm(x) -> int:
    return max((abs(a) for a in x), default=0)


def support(x) -> frozenset:
    return frozenset(i for i, a in enumerate(x) if a)


def primitive(x) -> tuple:
    """Divide out the gcd of the entries; the zero vector is returned unchanged."""
    d = math.gcd(*x) if x else 0
    if d <= 1:
        return tuple(x)
    return tuple(a // d for a in x)


def first_nonzero_positive(x) -> tuple:
    for a in x:
        if a:
            return tuple(x) if a > 0 else neg(x)
    return tuple(x)


def graded_lex_key(x):
    """Sort key: ∞-norm first, then plain lexicographic order."""
    return (inf_norm(x), tuple(x))


@dataclass(frozen=True)
class IntegerMatrix:
    """A dense integer matrix stored as a tuple of row tuples."""

    entries: tuple
    ncols: int

    def __init__(self, rows, ncols: int | None = None):
        rows = tuple(as_vector(r) for r in rows)
        if not rows and ncols is None:
            raise DimensionError("an empty matrix needs an explicit column count")
        width = len(rows[0]) if ncols is None else ncols
        for r in rows:
            if len(r) != width:
                raise DimensionError("ragged matrix rows")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "ncols", width)

    @classmethod
    def zeros(cls, m: int, n: int) -> IntegerMatrix:
        return cls([(0,) * n for _ in range(m)], ncols=n)

    @classmethod
    def diag(cls, v) -> IntegerMatrix:
        n = len(v)
        return cls([tuple(v[i] if i == j else 0 for j in range(n)) for i in range(n)], ncols=n)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def tolist(self) -> list:
        return [list(r) for r in self.entries]

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix([self.column(j) for j in range(self.ncols)], ncols=self.nrows)

    def matvec(self, x) -> tuple:
        if len(x) != self.ncols:
            raise DimensionError(f"matrix has {self.ncols} columns, vector has length {len(x)}")
        return tuple(sum(a * b for a, b in zip(r, x)) for r in self.entries)

    def bilinear(self, x, y) -> int:
        """``x⊤ M y``."""
        return dot(x, self.matvec(y))

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __repr__(self):
        return f"IntegerMatrix({self.tolist()!r})"


def as_matrix(obj) -> IntegerMatrix:
    return obj if isinstance(obj, IntegerMatrix) else IntegerMatrix(obj)


def as_extended(value):
    """Validate an extended integer: an ``int`` or ``±math.inf``."""
    if isinstance(value, float) and math.isinf(value):
        return value
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise DomainError(f"not an extended integer: {value!r}")
    return int(value)


@dataclass(frozen=True)
class ExtendedBounds:
    """Per-coordinate bounds ``lower <= x <= upper`` over Z ∪ {±∞}."""

    lower: tuple
    upper: tuple

    def __post_init__(self):
        lower = tuple(as_extended(v) for v in self.lower)
        upper = tuple(as_extended(v) for v in self.upper)
        if len(lower) != len(upper):
            raise DimensionError("lower and upper bounds differ in length")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def box(cls, n: int, lo=NEG_INF, hi=POS_INF) -> ExtendedBounds:
        return cls((lo,) * n, (hi,) * n)

    @classmethod
    def nonnegative(cls, n: int) -> ExtendedBounds:
        return cls((0,) * n, (POS_INF,) * n)

    @property
    def n(self) -> int:
        return len(self.lower)

    def contains(self, x) -> bool:
        _check_lengths(self.lower, x)
        return all(lo <= v <= hi for lo, v, hi in zip(self.lower, x, self.upper))

    def is_empty(self) -> bool:
        return any(lo > hi for lo, hi in zip(self.lower, self.upper))

    def is_finite(self) -> bool:
        return not any(isinstance(v, float) for v in self.lower + self.upper)

    def is_nonnegative_orthant(self) -> bool:
        return all(lo == 0 for lo in self.lower) and all(hi == POS_INF for hi in self.upper)

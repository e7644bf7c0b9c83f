"""Homogeneous polynomials (forms) stored as dense coefficient tensors.

A degree-``d`` form in ``n`` variables is ``f(x) = ⟨F, x⊗…⊗x⟩`` for a tensor
``F`` of shape ``(n,) * d``. Entries are Python ints held in a numpy object
array, so contractions are exact. Indices are 0-based.
"""

from __future__ import annotations

import itertools
import math
import os
from numbers import Integral

import numpy as np

from .errors import BudgetExceededError, DimensionError, DomainError
from .lattice import as_vector
from .polynomial import UnivariatePolynomial

DEFAULT_MAX_DENSE = 10**6


def max_dense_entries() -> int:
    return int(os.environ.get("GRAVER_OPT_MAX_DENSE", DEFAULT_MAX_DENSE))


def _check_size(n: int, d: int):
    size = n**d
    cap = max_dense_entries()
    if size > cap:
        raise BudgetExceededError(f"dense tensor with {n}^{d} = {size} entries exceeds cap {cap}")


class FormTensor:
    """Dense coefficient tensor of a form of degree ``d`` in ``n`` variables."""

    __slots__ = ("data",)

    def __init__(self, data):
        arr = np.array(data, dtype=object)
        if arr.ndim == 0:
            raise DomainError("a form tensor needs degree >= 1")
        n = arr.shape[0]
        if any(s != n for s in arr.shape):
            raise DimensionError(f"tensor is not cubical: shape {arr.shape}")
        _check_size(n, arr.ndim)
        flat = arr.reshape(-1)
        for i, v in enumerate(flat):
            if isinstance(v, bool) or not isinstance(v, Integral):
                raise DomainError(f"non-integer tensor entry {v!r}")
            flat[i] = int(v)
        self.data = arr

    @classmethod
    def _wrap(cls, arr) -> FormTensor:
        # trusted internal path: arr is already an object array of ints
        F = object.__new__(cls)
        F.data = arr
        return F

    @classmethod
    def zeros(cls, n: int, d: int) -> FormTensor:
        _check_size(n, d)
        arr = np.empty((n,) * d, dtype=object)
        arr.fill(0)
        return cls(arr)

    @classmethod
    def from_terms(cls, n: int, d: int, terms) -> FormTensor:
        """Build from ``{(i_1, …, i_d): coef}`` or an iterable of such pairs.

        Repeated index tuples accumulate.
        """
        F = cls.zeros(n, d)
        items = terms.items() if isinstance(terms, dict) else terms
        for index, coef in items:
            index = tuple(index)
            if len(index) != d:
                raise DimensionError(f"index {index} does not have {d} entries")
            if any(not 0 <= i < n for i in index):
                raise DimensionError(f"index {index} out of range for n={n}")
            F.data[index] += int(coef)
        return F

    @classmethod
    def all_ones(cls, n: int, d: int) -> FormTensor:
        F = cls.zeros(n, d)
        F.data.fill(1)
        return F

    @classmethod
    def diagonal(cls, coefficients, d: int) -> FormTensor:
        n = len(coefficients)
        return cls.from_terms(n, d, {(i,) * d: c for i, c in enumerate(coefficients)})

    @classmethod
    def from_matrix(cls, V) -> FormTensor:
        return cls([list(r) for r in getattr(V, "entries", V)])

    @property
    def degree(self) -> int:
        return self.data.ndim

    @property
    def n(self) -> int:
        return self.data.shape[0]

    def terms(self) -> dict:
        """Sparse view: nonzero entries keyed by index tuple."""
        return {
            tuple(int(i) for i in idx): v
            for idx, v in np.ndenumerate(self.data)
            if v != 0
        }

    def is_zero(self) -> bool:
        return not any(v != 0 for v in self.data.flat)

    def __eq__(self, other):
        if not isinstance(other, FormTensor):
            return NotImplemented
        return self.data.shape == other.data.shape and bool(np.all(self.data == other.data))

    def __add__(self, other):
        if self.data.shape != other.data.shape:
            raise DimensionError("cannot add tensors of different shape")
        return FormTensor(self.data + other.data)

    def __mul__(self, c):
        return FormTensor(self.data * int(c))

    __rmul__ = __mul__

    def __repr__(self):
        return f"FormTensor(degree={self.degree}, n={self.n}, terms={self.terms()!r})"

    def _check_vector(self, x):
        if len(x) != self.n:
            raise DimensionError(f"vector of length {len(x)} for a form in {self.n} variables")

    def inner(self, vectors) -> int:
        """``⟨F, v¹⊗…⊗v^d⟩`` for one vector per tensor axis."""
        if len(vectors) != self.degree:
            raise DimensionError(f"need {self.degree} vectors, got {len(vectors)}")
        acc = self.data
        for v in vectors:
            self._check_vector(v)
            acc = np.array(v, dtype=object) @ acc.reshape(self.n, -1)
        return int(acc[0]) if isinstance(acc, np.ndarray) else int(acc)

    def evaluate(self, x) -> int:
        x = as_vector(x)
        self._check_vector(x)
        return self.inner([x] * self.degree)

    def restrict_to_ray(self, z, g) -> UnivariatePolynomial:
        """Coefficients of ``h(μ) = f(z + μg)``.

        Contracts one axis at a time against the linear polynomial vector
        ``z + μg``, carrying a trailing axis of μ-coefficients.
        """
        z, g = as_vector(z), as_vector(g)
        self._check_vector(z)
        self._check_vector(g)
        zv = np.array(z, dtype=object)
        gv = np.array(g, dtype=object)
        n, d = self.n, self.degree
        # acc has shape (n^(remaining axes), k+1): polynomial entries after k contractions
        acc = self.data.reshape(-1, 1)
        for k in range(d):
            rest = acc.shape[0] // n
            blocks = acc.reshape(n, rest, k + 1)
            with_z = np.tensordot(zv, blocks, axes=([0], [0]))
            with_g = np.tensordot(gv, blocks, axes=([0], [0]))
            nxt = np.empty((rest, k + 2), dtype=object)
            nxt.fill(0)
            nxt[:, : k + 1] += with_z
            nxt[:, 1:] += with_g
            acc = nxt
        return UnivariatePolynomial(int(c) for c in acc[0])

    def subtensor(self, positions, fixed) -> FormTensor:
        """Let the axes in ``positions`` vary and pin the others to ``fixed`` (in axis order)."""
        positions = tuple(positions)
        idx = []
        it = iter(fixed)
        for axis in range(self.degree):
            idx.append(slice(None) if axis in positions else next(it))
        return FormTensor._wrap(self.data[tuple(idx)])

    def subtensors(self, k: int):
        """Yield ``(positions, fixed, T)`` for all ``C(d,k)·n^(d-k)`` k-dimensional subtensors."""
        d = self.degree
        if not 2 <= k <= d:
            raise DomainError(f"subtensor dimension {k} outside 2..{d}")
        for positions in itertools.combinations(range(d), k):
            for fixed in itertools.product(range(self.n), repeat=d - k):
                yield positions, fixed, self.subtensor(positions, fixed)


def subtensor_count(n: int, d: int, k: int) -> int:
    return math.comb(d, k) * n ** (d - k)


def evaluate(F: FormTensor, x) -> int:
    return F.evaluate(x)


def restrict_to_ray(F: FormTensor, z, g) -> UnivariatePolynomial:
    return F.restrict_to_ray(z, g)


def subtensors(F: FormTensor, k: int):
    return F.subtensors(k)

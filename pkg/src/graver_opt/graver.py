"""Graver bases, circuits and matroids of integer matrices.

The Graver basis is computed by a completion procedure seeded with a lattice
basis of the integer kernel: sums ``f + g`` of current elements are reduced by
conformal subtraction and every nonzero remainder is added, until all sums
reduce to zero. The resulting set contains the Graver basis; its ⊑-minimal
elements are exactly the Graver basis.

``brute_force_graver`` is an independent check: it enumerates the kernel points
of a box and keeps the ⊑-minimal ones, using only rational row reduction.
"""

from __future__ import annotations

import itertools
import math
import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BasisTooLargeError, BudgetExceededError, DomainError
from .hermite import column_hermite, integer_kernel_basis
from .lattice import (
    IntegerMatrix,
    as_matrix,
    as_vector,
    conformal,
    first_nonzero_positive,
    graded_lex_key,
    inf_norm,
    neg,
    primitive,
    same_orthant,
    support,
)

DEFAULT_MAX_BASIS = 10**5
DEFAULT_MAX_BOX_POINTS = 5 * 10**7


def max_basis_size() -> int:
    """Cap on basis size, overridable through ``GRAVER_OPT_MAX_BASIS``."""
    return int(os.environ.get("GRAVER_OPT_MAX_BASIS", DEFAULT_MAX_BASIS))


@dataclass(frozen=True)
class GraverBasis:
    """The Graver basis of ``matrix``, elements in graded-lex order."""

    matrix: IntegerMatrix
    elements: tuple

    def __init__(self, matrix, elements):
        matrix = as_matrix(matrix)
        elems = sorted({as_vector(g) for g in elements}, key=graded_lex_key)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "elements", tuple(elems))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return tuple(g) in self._index

    @property
    def n(self) -> int:
        return self.matrix.ncols

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {g: i for i, g in enumerate(self.elements)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def index(self, g) -> int:
        return self._index[tuple(g)]

    def tolist(self) -> list:
        return [list(g) for g in self.elements]

    def validate(self) -> None:
        """Raise ``DomainError`` unless every basis invariant holds."""
        A = self.matrix
        elems = set(self.elements)
        for g in self.elements:
            if not any(g):
                raise DomainError("zero vector in Graver basis")
            if any(A.matvec(g)):
                raise DomainError(f"{g} is not in the kernel")
            if neg(g) not in elems:
                raise DomainError(f"basis not sign-symmetric at {g}")
        for g, h in itertools.permutations(self.elements, 2):
            if conformal(g, h):
                raise DomainError(f"{h} is not ⊑-minimal ({g} ⊑ {h})")


def _normal_form(s, elems):
    """Reduce ``s`` by subtracting elements conformal to it until none is."""
    changed = True
    while changed and any(s):
        changed = False
        for g in elems:
            if conformal(g, s):
                s = tuple(a - b for a, b in zip(s, g))
                changed = True
                if not any(s):
                    break
    return s


def minimal_elements(vectors) -> list:
    """The ⊑-minimal members of a finite set of nonzero vectors."""
    vecs = sorted(set(vectors), key=lambda v: (sum(map(abs, v)), v))
    kept = []
    for v in vecs:
        if not any(conformal(g, v) for g in kept):
            kept.append(v)
    return kept


def compute_graver_basis(A, max_size: int | None = None) -> GraverBasis:
    """Graver basis of ``A`` by completion of a kernel lattice basis.

    Raises ``BasisTooLargeError`` once the working set exceeds ``max_size``
    (default: ``GRAVER_OPT_MAX_BASIS``).
    """
    A = as_matrix(A)
    cap = max_basis_size() if max_size is None else max_size
    seed = [primitive(b) for b in integer_kernel_basis(A)]
    elems = []
    members = set()

    def insert(v):
        for w in (v, neg(v)):
            if w not in members:
                members.add(w)
                elems.append(w)
        if len(elems) > cap:
            raise BasisTooLargeError("Graver completion exceeded the basis cap", len(elems))

    for b in seed:
        insert(b)
    queue = deque()
    for i, f in enumerate(elems):
        for g in elems[i + 1:]:
            if not same_orthant(f, g):
                queue.append(tuple(a + c for a, c in zip(f, g)))
    while queue:
        s = queue.popleft()
        if not any(s):
            continue
        r = _normal_form(s, elems)
        if not any(r):
            continue
        start = len(elems)
        insert(r)
        for new in elems[start:]:
            for g in elems:
                if g is not new and not same_orthant(new, g):
                    queue.append(tuple(a + c for a, c in zip(new, g)))
    return GraverBasis(A, minimal_elements(elems))


def _rational_rref(A):
    """Reduced row echelon form over Q; returns (rows, pivot_columns)."""
    rows = [[Fraction(v) for v in r] for r in A.entries]
    m, n = A.shape
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [v / piv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows[: len(pivots)], pivots


def kernel_points_in_box(A, radius: int, max_points: int = DEFAULT_MAX_BOX_POINTS):
    """All nonzero ``x`` with ``Ax = 0`` and ``‖x‖∞ <= radius``, as an int array.

    Free coordinates range over the box; pivot coordinates are recovered
    exactly from the rational row echelon form.
    """
    A = as_matrix(A)
    n = A.ncols
    rows, pivots = _rational_rref(A)
    free = [j for j in range(n) if j not in pivots]
    npts = (2 * radius + 1) ** len(free)
    if npts > max_points:
        raise BudgetExceededError(f"box enumeration needs {npts} points (cap {max_points})")
    denom = math.lcm(*(v.denominator for r in rows for v in r)) if rows else 1
    # pivot value * denom = coeff @ free values
    coeff = np.array(
        [[int(-r[j] * denom) for j in free] for r in rows], dtype=np.int64
    ).reshape(len(pivots), len(free))
    span = np.arange(-radius, radius + 1, dtype=np.int64)
    if free:
        grids = np.meshgrid(*([span] * len(free)), indexing="ij")
        fv = np.stack([g.ravel() for g in grids], axis=1)
    else:
        fv = np.zeros((1, 0), dtype=np.int64)
    scaled = fv @ coeff.T
    ok = np.all(scaled % denom == 0, axis=1)
    pv = scaled // denom
    ok &= np.all(np.abs(pv) <= radius, axis=1)
    pts = np.zeros((int(ok.sum()), n), dtype=np.int64)
    pts[:, free] = fv[ok]
    pts[:, pivots] = pv[ok]
    return pts[np.any(pts != 0, axis=1)]


def brute_force_graver(A, radius: int) -> GraverBasis:
    """⊑-minimal nonzero kernel elements inside the box of the given radius.

    Equals the Graver basis whenever ``radius`` is at least the largest
    ∞-norm of a Graver element.
    """
    A = as_matrix(A)
    pts = kernel_points_in_box(A, radius)
    if len(pts) == 0:
        return GraverBasis(A, [])
    l1 = np.abs(pts).sum(axis=1)
    kept = np.zeros((0, A.ncols), dtype=np.int64)
    for level in np.unique(l1):
        cand = pts[l1 == level]
        if len(kept):
            # q ⊑ p  iff  q∘p >= 0 and |q| <= |p| everywhere
            prod = cand[:, None, :] * kept[None, :, :]
            dom = np.all(prod >= 0, axis=2) & np.all(
                np.abs(kept)[None, :, :] <= np.abs(cand)[:, None, :], axis=2
            )
            cand = cand[~dom.any(axis=1)]
        kept = np.concatenate([kept, cand])
    return GraverBasis(A, [tuple(int(v) for v in row) for row in kept])


@dataclass(frozen=True)
class CircuitSet:
    """Circuits of a matrix, each stored once with its first nonzero entry positive.

    Iterating yields both signs, matching ``C(A) = -C(A)``.
    """

    matrix: IntegerMatrix
    representatives: tuple

    def __iter__(self):
        for c in self.representatives:
            yield c
            yield neg(c)

    def __len__(self):
        return 2 * len(self.representatives)

    def __contains__(self, c):
        return first_nonzero_positive(tuple(c)) in self.representatives

    @property
    def elements(self) -> tuple:
        return tuple(sorted(self, key=graded_lex_key))


@dataclass(frozen=True)
class Matroid:
    """Supports of circuits (0-based column indices)."""

    n: int
    circuits: frozenset

    def sorted_circuits(self) -> list:
        return sorted((sorted(c) for c in self.circuits), key=lambda c: (len(c), c))


def compute_circuits(A) -> CircuitSet:
    """Circuits via minimal dependent column subsets.

    Subsets are visited by increasing size; supersets of known circuit supports
    are skipped, so every dependent subset reached is minimally dependent and
    its kernel is spanned by one primitive vector of full support.
    """
    A = as_matrix(A)
    m, n = A.shape
    rank = column_hermite(A).rank
    found = []
    reps = []
    for size in range(1, min(rank + 1, n) + 1):
        for cols in itertools.combinations(range(n), size):
            s = frozenset(cols)
            if any(c <= s for c in found):
                continue
            sub = IntegerMatrix([[row[j] for j in cols] for row in A.entries], ncols=size)
            kernel = integer_kernel_basis(sub)
            if not kernel:
                continue
            assert len(kernel) == 1
            vec = [0] * n
            for j, v in zip(cols, primitive(kernel[0])):
                vec[j] = v
            vec = first_nonzero_positive(tuple(vec))
            assert support(vec) == s
            found.append(s)
            reps.append(vec)
    reps.sort(key=graded_lex_key)
    return CircuitSet(A, tuple(reps))


def compute_matroid(A) -> Matroid:
    A = as_matrix(A)
    circuits = compute_circuits(A)
    return Matroid(A.ncols, frozenset(support(c) for c in circuits.representatives))


def conformal_decompose(x, G: GraverBasis) -> list:
    """Write ``x`` as a conformal sum ``Σ μ_i g_i`` of distinct Graver elements.

    Greedy: take the first element (canonical order) conformal to the
    remainder and subtract its largest multiple that stays conformal. The term
    count can exceed ``2n - 2``. Returns ``[(μ, g), ...]`` in order of use.
    """
    x = as_vector(x)
    if len(x) != G.n:
        raise DomainError(f"vector length {len(x)} does not match {G.n} columns")
    if not any(x) or any(G.matrix.matvec(x)):
        raise DomainError(f"{x} is not a nonzero kernel element")
    terms = {}
    r = x
    while any(r):
        g = next((g for g in G.elements if conformal(g, r)), None)
        if g is None:
            raise DomainError(f"no basis element is conformal to {r}; not a Graver basis of A?")
        mu = min(abs(a) // abs(b) for a, b in zip(r, g) if b)
        r = tuple(a - mu * b for a, b in zip(r, g))
        terms[g] = terms.get(g, 0) + mu
    return [(mu, g) for g, mu in terms.items()]


def max_graver_norm(G: GraverBasis) -> int:
    return max((inf_norm(g) for g in G), default=0)

"""Graver cones, their duals, and membership certificates.

Generators are built from same-orthant tuples of Graver elements. A dual-cone
membership test scans the generators in canonical order and reports the first
one whose inner product with the tested object is negative.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import BudgetExceededError, DimensionError, DomainError
from .forms import FormTensor
from .graver import GraverBasis, Matroid
from .lattice import as_matrix, as_vector, graded_lex_key, neg, pointwise_product, same_orthant

DEFAULT_KD_BUDGET = 5 * 10**6


@dataclass(frozen=True)
class ConeGeneratorSet:
    """Rank-1 generator descriptors: each is a tuple of ``degree`` Graver elements."""

    degree: int
    generators: tuple

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def matrices(self) -> list:
        """Symmetrized generator matrices ``g⊗h + h⊗g`` (degree 2 only)."""
        if self.degree != 2:
            raise DomainError("matrices() is only defined for degree-2 generators")
        return [_sym_outer(g, h) for g, h in self.generators]


@dataclass(frozen=True)
class MembershipCertificate:
    """Verdict of a dual-cone test.

    On a negative verdict ``witness`` holds the violating generator tuple and
    ``value`` its (negative) inner product with the tested object. For degree-d
    checks ``k``, ``positions`` and ``fixed`` locate the offending subtensor.
    """

    verdict: bool
    witness: tuple | None = None
    value: int | None = None
    k: int | None = None
    positions: tuple | None = None
    fixed: tuple | None = None

    def __bool__(self):
        return self.verdict

    def to_dict(self) -> dict:
        out = {"member": self.verdict}
        if not self.verdict:
            out["witness"] = [list(g) for g in self.witness]
            out["value"] = self.value
            if self.k is not None:
                out["k"] = self.k
                out["positions"] = list(self.positions)
                out["fixed"] = list(self.fixed)
        return out


def _sym_outer(g, h):
    n = len(g)
    return [[g[i] * h[j] + h[i] * g[j] for j in range(n)] for i in range(n)]


def _sign_canonical_pair(g, h):
    """Orient ``{g, h}`` versus ``{-g, -h}``: keep the copy holding the
    graded-lex largest of the four vectors, listed first."""
    c = max((g, h, neg(g), neg(h)), key=graded_lex_key)
    if c == g:
        return g, h
    if c == h:
        return h, g
    if c == neg(g):
        return neg(g), neg(h)
    return neg(h), neg(g)


def _compatible_pairs(G: GraverBasis):
    elems = G.elements
    for i, g in enumerate(elems):
        for h in elems[i + 1:]:
            if same_orthant(g, h):
                yield g, h


def quadratic_generators(G: GraverBasis, dedupe_sign: bool = False) -> ConeGeneratorSet:
    """Same-orthant pairs ``{g, h}``, ``g ≠ h``, of Graver elements.

    ``{g, h}`` and ``{-g, -h}`` give the same matrix; with ``dedupe_sign`` only
    one of them is kept (the membership tests scan this reduced set).
    """
    pairs = list(_compatible_pairs(G))
    if dedupe_sign:
        pairs = sorted({_sign_canonical_pair(g, h) for g, h in pairs}, key=lambda p: (G.index(p[0]), G.index(p[1])))
    return ConeGeneratorSet(2, tuple(pairs))


def _check_square(V, n):
    if V.shape != (n, n):
        raise DimensionError(f"matrix of shape {V.shape}, expected ({n}, {n})")


def in_dual_quadratic_cone(V, G: GraverBasis) -> MembershipCertificate:
    """Is ``g⊤Vh + h⊤Vg >= 0`` for every generator pair?

    The symmetric form makes non-symmetric ``V`` behave like its symmetric part.
    ``value`` of a witness is the inner product with ``g⊗h + h⊗g``.
    """
    V = as_matrix(V)
    _check_square(V, G.n)
    for g, h in quadratic_generators(G, dedupe_sign=True):
        val = V.bilinear(g, h) + V.bilinear(h, g)
        if val < 0:
            return MembershipCertificate(False, (g, h), val)
    return MembershipCertificate(True)


def in_dual_diagonal_cone(v, G: GraverBasis) -> MembershipCertificate:
    """Is ``(g∘h)⊤v >= 0`` for every generator pair?"""
    v = as_vector(v)
    if len(v) != G.n:
        raise DimensionError(f"vector of length {len(v)}, expected {G.n}")
    for g, h in quadratic_generators(G, dedupe_sign=True):
        val = sum(a * b * c for a, b, c in zip(g, h, v))
        if val < 0:
            return MembershipCertificate(False, (g, h), val)
    return MembershipCertificate(True)


def diagonal_generators(G: GraverBasis) -> list:
    """Generators ``g∘h`` of the diagonal Graver cone."""
    return sorted({pointwise_product(g, h) for g, h in quadratic_generators(G)})


def characterize_diagonal_strictness(M: Matroid):
    """Smallest index ``k`` such that no two distinct circuits meet exactly in ``{k}``.

    Such a ``k`` exists iff the dual diagonal cone strictly contains the
    nonnegative orthant; returns ``None`` otherwise.
    """
    blocked = set()
    for C, E in itertools.combinations(M.circuits, 2):
        common = C & E
        if len(common) == 1:
            blocked |= common
    return next((k for k in range(M.n) if k not in blocked), None)


def degree_generators(G: GraverBasis, d: int) -> ConeGeneratorSet:
    """Multisets of ``d`` pairwise same-orthant Graver elements, not all equal.

    Each multiset appears once, its members in canonical basis order.
    """
    if d < 2:
        raise DomainError(f"degree must be at least 2, got {d}")
    elems = G.elements
    N = len(elems)
    compat = [[same_orthant(elems[i], elems[j]) for j in range(N)] for i in range(N)]
    out = []

    def extend(chosen, start):
        if len(chosen) == d:
            if chosen[0] != chosen[-1]:
                out.append(tuple(elems[i] for i in chosen))
            return
        for j in range(start, N):
            if all(compat[i][j] for i in chosen):
                chosen.append(j)
                extend(chosen, j)
                chosen.pop()

    extend([], 0)
    return ConeGeneratorSet(d, tuple(out))


def _distinct_orderings(multiset):
    return sorted(set(itertools.permutations(multiset)))


def in_K_d(F: FormTensor, G: GraverBasis, budget: int = DEFAULT_KD_BUDGET) -> MembershipCertificate:
    """Does every k-dimensional subtensor of ``F`` (2 <= k <= d) lie in the dual degree-k cone?

    Each generator multiset is tested in every distinct ordering, since a
    subtensor need not be symmetric.
    """
    if F.degree < 2:
        raise DomainError("K_d membership needs a tensor of degree >= 2")
    if F.n != G.n:
        raise DimensionError(f"tensor over {F.n} variables, basis over {G.n}")
    gens = {k: degree_generators(G, k) for k in range(2, F.degree + 1)}
    ordered = {k: [p for t in gens[k] for p in _distinct_orderings(t)] for k in gens}
    cost = sum(math.comb(F.degree, k) * F.n ** (F.degree - k) * len(ordered[k]) for k in ordered)
    if cost > budget:
        raise BudgetExceededError(f"K_d check needs {cost} inner products (budget {budget})")
    for k in range(2, F.degree + 1):
        if not ordered[k]:
            continue
        for positions, fixed, T in F.subtensors(k):
            for tup in ordered[k]:
                val = T.inner(tup)
                if val < 0:
                    return MembershipCertificate(False, tup, val, k, positions, fixed)
    return MembershipCertificate(True)

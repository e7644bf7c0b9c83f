"""Independent brute-force oracles and random instance generators for the tests."""

from __future__ import annotations

import itertools
import random

from graver_opt import (
    ExtendedBounds,
    FormObjective,
    FormTensor,
    IntegerMatrix,
    QuadraticObjective,
    SeparableObjective,
    compute_circuits,
)
from graver_opt.hermite import matrix_rank


def random_matrix(rng: random.Random, m: int, n: int, lo: int = -3, hi: int = 3) -> IntegerMatrix:
    return IntegerMatrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)], ncols=n)


def graver_radius(A: IntegerMatrix) -> int:
    """A bound on ‖g‖∞ over the Graver basis, from circuits alone.

    Every Graver element is ``Σ λ_i c_i`` with ``0 <= λ_i < 1`` over at most
    ``n - rank`` sign-compatible circuits, so ``‖g‖∞ <= (n - rank)·max ‖c‖∞``.
    """
    circuits = list(compute_circuits(A))
    if not circuits:
        return 0
    top = max(max(abs(v) for v in c) for c in circuits)
    return max(1, (A.ncols - matrix_rank(A)) * top)


def box_points(bounds: ExtendedBounds):
    return itertools.product(*(range(lo, hi + 1) for lo, hi in zip(bounds.lower, bounds.upper)))


def feasible_points(A: IntegerMatrix, b, bounds: ExtendedBounds):
    b = tuple(b)
    return [x for x in box_points(bounds) if A.matvec(x) == b]


def brute_minimum(objective, A, b, bounds):
    """``(min value, [all minimizers])`` over a finite box, or ``None`` if empty."""
    best, arg = None, []
    for x in feasible_points(A, b, bounds):
        v = objective.evaluate(x)
        if best is None or v < best:
            best, arg = v, [x]
        elif v == best:
            arg.append(x)
    return None if best is None else (best, arg)


def row_space_vector(rng: random.Random, A: IntegerMatrix, lo: int = -2, hi: int = 2):
    y = [rng.randint(lo, hi) for _ in range(A.nrows)]
    return A.transpose().matvec(y)


def family_matrix(a) -> IntegerMatrix:
    """``V_ij = a_i + a_j``."""
    return IntegerMatrix([[ai + aj for aj in a] for ai in a])


def certified_quadratic_matrix(rng: random.Random, A: IntegerMatrix) -> IntegerMatrix:
    """``Diag(v) + Σ (r⊗s + s⊗r)`` with ``v >= 0`` and ``r`` in the row space of ``A``.

    Row-space terms vanish on kernel pairs, so the result passes the dual
    quadratic cone test for any ``A``.
    """
    n = A.ncols
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        M[i][i] = rng.randint(0, 3)
    for _ in range(rng.randint(0, 2)):
        r = row_space_vector(rng, A)
        s = [rng.randint(-2, 2) for _ in range(n)]
        for i in range(n):
            for j in range(n):
                M[i][j] += r[i] * s[j] + s[i] * r[j]
    return IntegerMatrix(M)


def vacuous_matrix(rng: random.Random, n: int) -> IntegerMatrix:
    """An ``(n-1) × n`` matrix of rank ``n-1``: its kernel is a line, so no
    two Graver elements share an orthant."""
    while True:
        A = random_matrix(rng, n - 1, n, -2, 2)
        if matrix_rank(A) == n - 1:
            return A


def random_box(rng: random.Random, n: int, radius: int = 3) -> ExtendedBounds:
    lower = tuple(rng.randint(-radius, 0) for _ in range(n))
    upper = tuple(rng.randint(0, radius) for _ in range(n))
    return ExtendedBounds(lower, upper)


def random_certified_instance(rng: random.Random, kind: str):
    """``(A, b, bounds, objective)`` with a certified objective and a nonempty finite feasible set."""
    n = rng.randint(2, 4)
    if kind == "vacuous":
        A = vacuous_matrix(rng, n)
    else:
        m = rng.randint(1, 2)
        A = random_matrix(rng, m, n)
    bounds = random_box(rng, n)
    x_star = tuple(rng.randint(lo, hi) for lo, hi in zip(bounds.lower, bounds.upper))
    b = A.matvec(x_star)
    w = tuple(rng.randint(-6, 6) for _ in range(n))
    if kind == "separable":
        v = tuple(rng.randint(0, 3) for _ in range(n))
        objective = SeparableObjective(v, w, tuple(rng.randint(-3, 3) for _ in range(n)))
    elif kind == "family":
        A = IntegerMatrix([[1] * n])
        b = A.matvec(x_star)
        a = [rng.randint(-2, 2) for _ in range(n)]
        objective = QuadraticObjective(family_matrix(a), w, rng.randint(-5, 5))
    elif kind == "rowspace":
        objective = QuadraticObjective(certified_quadratic_matrix(rng, A), w, rng.randint(-5, 5))
    elif kind == "vacuous":
        V = IntegerMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        objective = QuadraticObjective(V, w, 0)
    else:
        raise ValueError(kind)
    return A, b, bounds, objective


def certified_cubic(rng: random.Random, A: IntegerMatrix) -> FormTensor:
    """``Σ r⊗V`` (``r`` placed at a random tensor position) with ``r >= 0`` in
    the row space of ``A`` and ``V = Diag(v >= 0) + row-space terms``."""
    n = A.ncols
    total = FormTensor.zeros(n, 3)
    for _ in range(rng.randint(1, 2)):
        while True:
            r = row_space_vector(rng, A, 0, 2)
            if all(c >= 0 for c in r):
                break
        V = certified_quadratic_matrix(rng, A)
        pos = rng.randrange(3)
        terms = {}
        for i, j, k in itertools.product(range(n), repeat=3):
            idx = (i, j, k)
            rest = [idx[p] for p in range(3) if p != pos]
            c = r[idx[pos]] * V[rest[0], rest[1]]
            if c:
                terms[idx] = c
        total = total + FormTensor.from_terms(n, 3, terms)
    return total


def exhaustive_ray_minimum(h, s: int):
    """Smallest ``μ`` minimizing ``h`` over ``{0, …, s}``, with its value."""
    best = min(range(s + 1), key=lambda mu: (h(mu), mu))
    return best, h(best)


def subset_sums(v) -> set:
    sums = {0}
    for c in v:
        sums |= {t + c for t in sums}
    return sums


def form_objective(F: FormTensor) -> FormObjective:
    return FormObjective(F)
